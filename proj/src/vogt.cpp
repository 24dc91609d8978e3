#include "spiralkit/vogt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace spiralkit
{

namespace
{

constexpr double kMaxStep = 0.5 * kPi;

double unwrap_near(double angle, double reference)
{
    return reference + std::remainder(angle - reference, kTwoPi);
}

double chord_direction(Point a, Point b)
{
    return std::atan2(b.y - a.y, b.x - a.x);
}

// Follows a chord direction continuously; refuses steps of π/2 or more.
class AngleTracker
{
public:
    explicit AngleTracker(double start) : value_(start) {}

    double advance(double raw)
    {
        const double next = unwrap_near(raw, value_);
        if (std::abs(next - value_) >= kMaxStep)
            throw Error(ErrorKind::ResolutionTooCoarse,
                        "chord direction jumps by π/2 or more between samples");
        value_ = next;
        return value_;
    }

    double value() const { return value_; }

private:
    double value_;
};

int sign_of(double v, double tol)
{
    if (v > tol)
        return 1;
    if (v < -tol)
        return -1;
    return 0;
}

// Number of odd multiples of π strictly between a and b.
int reversals_between(double a, double b)
{
    const double lo = (std::min(a, b) - kPi) / kTwoPi;
    const double hi = (std::max(a, b) - kPi) / kTwoPi;
    const int n = static_cast<int>(std::ceil(hi) - std::floor(lo)) - 1;
    return std::max(n, 0);
}

} // namespace

// ============================================================================
// SampledSpiral
// ============================================================================

SampledSpiral::SampledSpiral(std::vector<Sample> samples, bool circular)
    : samples_(std::move(samples)), circular_(circular)
{
    if (samples_.size() < 2)
        throw Error(ErrorKind::InvalidInput, "a sampled curve needs at least two samples");
    for (const Sample& p : samples_)
    {
        if (!std::isfinite(p.s) || !std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.tau)
            || !std::isfinite(p.k_left) || !std::isfinite(p.k_right))
            throw Error(ErrorKind::InvalidInput, "sample fields must be finite");
    }
    if (samples_.front().s != 0.0)
        throw Error(ErrorKind::InvalidInput, "arclength must start at 0");

    double kmax = 0.0;
    for (const Sample& p : samples_)
        kmax = std::max({kmax, std::abs(p.k_left), std::abs(p.k_right)});
    const double ktol = 1e-12 * (1.0 + kmax);

    for (std::size_t i = 0; i + 1 < samples_.size(); ++i)
    {
        const Sample& a = samples_[i];
        const Sample& b = samples_[i + 1];
        if (!(b.s > a.s))
            throw Error(ErrorKind::InvalidInput, "arclength must increase strictly");
        if (std::abs(b.tau - a.tau) >= kMaxStep)
            throw Error(ErrorKind::ResolutionTooCoarse,
                        "tangent turns by π/2 or more between samples " + std::to_string(i) + " and "
                            + std::to_string(i + 1));
        const Point step = b.point() - a.point();
        if (dot(step, unit(a.tau)) <= 0.0 || dot(step, unit(b.tau)) <= 0.0)
            throw Error(ErrorKind::ResolutionTooCoarse, "step direction disagrees with the tangent");
    }

    // Merged curvature sequence k_right0, k_left1, k_right1, ...
    std::vector<double> merged;
    merged.reserve(2 * samples_.size());
    merged.push_back(samples_.front().k_right);
    for (std::size_t i = 1; i < samples_.size(); ++i)
    {
        merged.push_back(samples_[i].k_left);
        if (i + 1 < samples_.size())
            merged.push_back(samples_[i].k_right);
    }
    bool up = false, down = false;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i)
    {
        const double d = merged[i + 1] - merged[i];
        if (d > ktol)
            up = true;
        else if (d < -ktol)
            down = true;
    }
    if (up && down)
        throw Error(ErrorKind::InvalidInput, "curvature is not monotone");
    if (!up && !down && !circular_)
        throw Error(ErrorKind::InvalidInput, "constant curvature requires the circular flag");
    monotonicity_ = up ? Monotonicity::Increasing : down ? Monotonicity::Decreasing : Monotonicity::Constant;
}

SampledSpiral SampledSpiral::subspan(std::size_t i0, std::size_t i1) const
{
    if (i0 >= i1 || i1 >= samples_.size())
        throw Error(ErrorKind::InvalidInput, "invalid sub-span");
    std::vector<Sample> out(samples_.begin() + static_cast<std::ptrdiff_t>(i0),
                            samples_.begin() + static_cast<std::ptrdiff_t>(i1) + 1);
    const double s0 = out.front().s;
    for (Sample& p : out)
        p.s -= s0;
    const bool flat = out.front().k_right == out.back().k_left;
    return SampledSpiral(std::move(out), circular_ || flat);
}

SampledSpiral SampledSpiral::mirrored() const
{
    std::vector<Sample> out = samples_;
    for (Sample& p : out)
    {
        p.y = -p.y;
        p.tau = -p.tau;
        p.k_left = -p.k_left;
        p.k_right = -p.k_right;
    }
    return SampledSpiral(std::move(out), circular_);
}

SampledSpiral SampledSpiral::transformed(const Similarity& sim) const
{
    std::vector<Sample> out = samples_;
    for (Sample& p : out)
    {
        const Point q = sim.apply(p.point());
        p.s *= sim.scale;
        p.x = q.x;
        p.y = q.y;
        p.tau = sim.apply_angle(p.tau);
        p.k_left = sim.apply_curvature(p.k_left);
        p.k_right = sim.apply_curvature(p.k_right);
    }
    return SampledSpiral(std::move(out), circular_);
}

SampledSpiral SampledSpiral::chord_frame() const
{
    const Point a = samples_.front().point();
    const Point b = samples_.back().point();
    if (a.x == b.x && a.y == b.y)
        throw Error(ErrorKind::CoincidentEndpoints, "closed curve has no chord");
    const double mu = chord_direction(a, b);
    Similarity sim;
    sim.rotation = -mu;
    sim.translation = -rotate(0.5 * (a + b), -mu);
    return transformed(sim);
}

std::size_t SampledSpiral::reference_index() const
{
    const std::size_t n = samples_.size();
    std::vector<double> m(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        const Sample& p = samples_[i];
        double kl = p.k_left, kr = p.k_right;
        if (i == 0)
            kl = kr;
        if (i + 1 == n)
            kr = kl;
        m[i] = (kl * kr <= 0.0) ? 0.0 : std::min(std::abs(kl), std::abs(kr));
    }
    const double best = *std::min_element(m.begin(), m.end());
    std::size_t first = 0;
    while (m[first] != best)
        ++first;
    std::size_t last = first;
    while (last + 1 < n && m[last + 1] == best)
        ++last;
    return (first + last) / 2;
}

bool SampledSpiral::has_inflection() const
{
    double lo = samples_.front().k_right, hi = lo;
    for (const Sample& p : samples_)
    {
        lo = std::min({lo, p.k_left, p.k_right});
        hi = std::max({hi, p.k_left, p.k_right});
    }
    return lo < 0.0 && hi > 0.0;
}

// ============================================================================
// Sign and range checks
// ============================================================================

VogtSign vogt_sign(double alpha, double beta, double k1, double k2, double tol)
{
    const int sa = sign_of(alpha + beta, tol);
    const int sk = sign_of(k2 - k1, tol * (1.0 + std::abs(k1) + std::abs(k2)));
    if (sa == 0 && sk == 0)
        return VogtSign::Circular;
    return (sa == sk) ? VogtSign::Consistent : VogtSign::Inconsistent;
}

bool short_bounds_check(const NormalizedEnds& e)
{
    const double a = e.alpha, b = e.beta;
    const double tol = 1e-12;
    if (std::abs(e.kappa1 - e.kappa2) <= tol * (1.0 + std::abs(e.kappa1) + std::abs(e.kappa2)))
        return std::abs(a + b) <= tol && a > -kPi && a < kPi && b > -kPi && b < kPi;
    if (e.kappa1 < e.kappa2)
        return a + b > 0.0 && a > -kPi && a <= kPi && b > -kPi && b <= kPi;
    return a + b < 0.0 && a >= -kPi && a < kPi && b >= -kPi && b < kPi;
}

// ============================================================================
// Cumulative angles
// ============================================================================

CumulativeAngles cumulative_angles(const SampledSpiral& curve)
{
    const auto& p = curve.samples();
    const std::size_t n = curve.last();
    const std::size_t r = curve.reference_index();

    AngleTracker mu(p[r].tau);
    for (std::size_t v = r + 1; v <= n; ++v)
        mu.advance(chord_direction(p[r].point(), p[v].point()));
    for (std::size_t u = r; u-- > 0;)
        mu.advance(chord_direction(p[u].point(), p[n].point()));

    CumulativeAngles ca;
    ca.alpha_tilde = p[0].tau - mu.value();
    ca.beta_tilde = p[n].tau - mu.value();
    ca.omega_tilde = 0.5 * (ca.alpha_tilde + ca.beta_tilde);
    for (std::size_t i = 0; i < n; ++i)
        ca.rho += 0.5 * (p[i].k_right + p[i + 1].k_left) * (p[i + 1].s - p[i].s);

    if (curve.monotonicity() == Monotonicity::Decreasing)
    {
        ca.N1 = static_cast<int>(std::lround((canonical_angle_lower(ca.alpha_tilde) - ca.alpha_tilde) / kTwoPi));
        ca.N2 = static_cast<int>(std::lround((canonical_angle_lower(ca.beta_tilde) - ca.beta_tilde) / kTwoPi));
    }
    else
    {
        ca.N1 = static_cast<int>(std::lround((ca.alpha_tilde - canonical_angle(ca.alpha_tilde)) / kTwoPi));
        ca.N2 = static_cast<int>(std::lround((ca.beta_tilde - canonical_angle(ca.beta_tilde)) / kTwoPi));
    }
    return ca;
}

CumulativeAngles cumulative_angles(const SampledSpiral& curve, std::size_t i0, std::size_t i1)
{
    if (i0 == i1)
        return CumulativeAngles{};
    return cumulative_angles(curve.subspan(i0, i1));
}

ChordAngleProfile chord_angle_profile(const SampledSpiral& curve)
{
    const auto& p = curve.samples();
    const std::size_t n = curve.last();
    ChordAngleProfile out;
    out.mu_start.resize(n + 1);
    out.mu_end.resize(n + 1);

    AngleTracker fwd(p[0].tau);
    out.mu_start[0] = p[0].tau;
    for (std::size_t v = 1; v <= n; ++v)
        out.mu_start[v] = fwd.advance(chord_direction(p[0].point(), p[v].point()));

    AngleTracker back(p[n].tau);
    out.mu_end[n] = p[n].tau;
    for (std::size_t u = n; u-- > 0;)
        out.mu_end[u] = back.advance(chord_direction(p[u].point(), p[n].point()));

    if (std::abs(out.mu_start[n] - out.mu_end[0]) > 1e-6)
        throw Error(ErrorKind::ResolutionTooCoarse, "chord direction tracking is path dependent");
    return out;
}

// ============================================================================
// Counters
// ============================================================================

ChordCounters chord_counters(const SampledSpiral& curve)
{
    const SampledSpiral frame = curve.chord_frame();
    const auto& p = frame.samples();
    const std::size_t n = frame.last();
    const double c = p[n].x;
    ChordCounters out;

    // Interior samples with y exactly 0 take the side of their neighbours.
    std::size_t prev = 0;
    for (std::size_t i = 1; i < n; ++i)
    {
        if (p[i].y == 0.0)
            continue;
        if (prev != 0 && p[prev].y * p[i].y < 0.0)
        {
            double x;
            if (prev + 1 == i)
            {
                const double t = p[prev].y / (p[prev].y - p[i].y);
                x = p[prev].x + t * (p[i].x - p[prev].x);
                const double lo = std::min(p[prev].x, p[i].x), hi = std::max(p[prev].x, p[i].x);
                if ((lo < -c && -c < hi) || (lo < c && c < hi))
                    throw Error(ErrorKind::ResolutionTooCoarse, "crossing too close to an endpoint to classify");
            }
            else
            {
                x = p[(prev + i) / 2].x;
            }
            if (x < -c)
                ++out.N1;
            else if (x > c)
                ++out.N2;
            else
                ++out.chord_crossings;
        }
        prev = i;
    }

    // Tangent reversals per branch; the frame angle is the chord direction 0.
    const std::size_t r = frame.reference_index();
    out.M1 = reversals_between(p[0].tau, p[r].tau);
    out.M2 = reversals_between(p[r].tau, p[n].tau);
    return out;
}

bool is_short(const SampledSpiral& curve)
{
    const ChordCounters cc = chord_counters(curve);
    return cc.M1 == 0 && cc.M2 == 0;
}

std::vector<std::pair<double, double>> delta_profile(const SampledSpiral& curve)
{
    const ChordAngleProfile prof = chord_angle_profile(curve);
    const auto& p = curve.samples();
    std::vector<std::pair<double, double>> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out.emplace_back(p[i].s, prof.mu_end[i] - prof.mu_start[i]);
    return out;
}

bool winding_bounds_check(const CumulativeAngles& ca, bool has_inflection)
{
    const double w = 2.0 * std::abs(ca.omega_tilde);
    const double r = std::abs(ca.rho);
    if (!(r < w + kTwoPi))
        return false;
    if (!has_inflection)
        return 0.0 < w && w < r;
    return true;
}

NormalizedEnds end_data(const SampledSpiral& curve)
{
    const Sample& a = curve.samples().front();
    const Sample& b = curve.samples().back();
    NormalizedEnds e = normalize_pair({a.x, a.y, a.tau, a.k_right}, {b.x, b.y, b.tau, b.k_left}).first;
    if (curve.monotonicity() == Monotonicity::Decreasing)
    {
        e.alpha = canonical_angle_lower(e.alpha);
        e.beta = canonical_angle_lower(e.beta);
    }
    return e;
}

} // namespace spiralkit

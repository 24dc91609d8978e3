#include "spiralkit/biarc.hpp"
#include "spiralkit/clothoid.hpp"
#include "spiralkit/construct.hpp"
#include "spiralkit/envelope.hpp"
#include "spiralkit/selftest.hpp"
#include "spiralkit/vogt.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <sstream>

namespace spiralkit::selftest
{

namespace
{

class Timer
{
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct ClothoidArc
{
    double a = 1.0;
    double s0 = 0.0;
    double s1 = 1.0;

    double k(double s) const { return s / (a * a); }
    SampledSpiral sample(std::size_t n) const { return sample_clothoid({a, s0, s1, n}); }
};

ClothoidArc random_short_clothoid(Rng& rng)
{
    for (;;)
    {
        ClothoidArc c;
        c.a = rng.uniform(0.5, 2.0);
        c.s0 = c.a * rng.uniform(-2.5, 2.5);
        c.s1 = c.s0 + c.a * rng.uniform(0.2, 3.0);
        const double turn = std::abs(c.s1 * c.s1 - c.s0 * c.s0) / (2.0 * c.a * c.a);
        if (turn > 0.02 && oracle::clothoid_short(c.a, c.s0, c.s1, 4000))
            return c;
    }
}

double angle_gap(double a, double b)
{
    return std::abs(canonical_angle(a - b));
}

double element_gap(const CurvatureElement& a, const CurvatureElement& b)
{
    const double scale = 1.0 + std::max(std::abs(a.k), std::abs(b.k));
    return std::max({distance(a.point(), b.point()), angle_gap(a.tau, b.tau), std::abs(a.k - b.k) / scale});
}

// Spans [i0, i1] strictly growing around sample m.
std::vector<std::pair<std::size_t, std::size_t>> nested_spans(std::size_t n, std::size_t m, int count)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t left = std::max<std::size_t>(1, m / count);
    const std::size_t right = std::max<std::size_t>(1, (n - 1 - m) / count);
    for (int j = 1; j <= count; ++j)
    {
        const std::size_t i0 = (m >= j * left) ? m - j * left : 0;
        const std::size_t i1 = std::min(n - 1, m + j * right);
        if (out.empty() || i0 < out.back().first || i1 > out.back().second)
            out.emplace_back(i0, i1);
    }
    return out;
}

// ----------------------------------------------------------------------------

CriterionResult q_invariance(std::uint64_t seed)
{
    Timer timer;
    Rng rng(seed + 1);
    double worst_motion = 0.0, worst_case = 0.0;
    int seen_a = 0, seen_b = 0, seen_c = 0;

    for (int i = 0; i < 1000; ++i)
    {
        CurvatureElement K1 = rng.element(3.0, 2.0);
        const CurvatureElement K2 = rng.element(3.0, 2.0);
        if (rng.coin(0.2))
            K1.k = 0.0;
        const double q = q_invariant(K1, K2);
        const double scale = std::max(1.0, std::abs(q));

        const Similarity sim = rng.similarity();
        worst_motion = std::max(worst_motion, std::abs(q_invariant(sim.apply(K1), sim.apply(K2)) - q) / scale);

        Point c;
        do
            c = {rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
        while (distance(c, K1.point()) < 0.3 || distance(c, K2.point()) < 0.3);
        const CurvatureElement K0 = circle_element(c, rng.log_uniform(0.5, 3.0));
        const double qi = q_invariant(invert_element(K1, K0), invert_element(K2, K0));
        worst_motion = std::max(worst_motion, std::abs(qi - q) / scale);

        if (K1.k == 0.0)
        {
            worst_case = std::max(worst_case, std::abs(oracle::q_line_circle(K1, K2) - q) / scale);
            ++seen_b;
            continue;
        }
        worst_case = std::max(worst_case, std::abs(oracle::q_two_circles(K1, K2) - q) / scale);
        ++seen_a;
        double qc = 0.0;
        if (oracle::q_intersecting(K1, K2, qc))
        {
            worst_case = std::max(worst_case, std::abs(qc - q) / scale);
            ++seen_c;
        }
    }

    CriterionResult r;
    r.seconds = timer.seconds();
    r.pass = worst_motion <= 1e-8 && worst_case <= 1e-9 && seen_a > 0 && seen_b > 0 && seen_c > 0 && r.seconds < 2.0;
    std::ostringstream d;
    d << "max invariance dev " << worst_motion << ", max case dev " << worst_case << " (a:" << seen_a
      << " b:" << seen_b << " c:" << seen_c << ")";
    r.detail = d.str();
    return r;
}

CriterionResult spiral_nonpositivity(std::uint64_t seed)
{
    Timer timer;
    Rng rng(seed + 2);
    int positive = 0, weak = 0, strict_pairs = 0;
    double worst_q = -1.0, weakest = -1.0;

    for (int c = 0; c < 50; ++c)
    {
        ClothoidArc arc;
        arc.a = rng.uniform(0.5, 2.0);
        arc.s0 = arc.a * rng.uniform(-3.0, 3.0);
        arc.s1 = arc.s0 + arc.a * rng.uniform(0.5, 4.0);
        for (int p = 0; p < 100; ++p)
        {
            double u = rng.uniform(arc.s0, arc.s1), v = rng.uniform(arc.s0, arc.s1);
            if (u > v)
                std::swap(u, v);
            const double q = q_invariant(clothoid_element(arc.a, u), clothoid_element(arc.a, v));
            worst_q = std::max(worst_q, q);
            if (q > 1e-9)
                ++positive;
            if (std::abs(arc.k(u) - arc.k(v)) > 1e-3)
            {
                ++strict_pairs;
                weakest = std::max(weakest, q);
                if (q > -1e-6)
                    ++weak;
            }
        }
    }

    CriterionResult r;
    r.seconds = timer.seconds();
    r.pass = positive == 0 && weak == 0 && r.seconds < 5.0;
    std::ostringstream d;
    d << "Q>1e-9: " << positive << "/5000 (max Q " << worst_q << "); Q>-1e-6 with |dk|>1e-3: " << weak << "/"
      << strict_pairs << " (max " << weakest << ")";
    r.detail = d.str();
    return r;
}

CriterionResult vogt_suite(std::uint64_t seed)
{
    Timer timer;
    Rng rng(seed + 3);
    int sign_bad = 0, bounds_bad = 0, short_bad = 0, nested_bad = 0, nested_checked = 0;

    auto check_nested = [&](const SampledSpiral& curve) {
        const std::size_t n = curve.size();
        const std::size_t m = static_cast<std::size_t>(rng.integer(static_cast<int>(n / 4), static_cast<int>(3 * n / 4)));
        double prev = -1.0;
        for (const auto& [i0, i1] : nested_spans(n, m, 20))
        {
            const double w = std::abs(cumulative_angles(curve, i0, i1).omega_tilde);
            if (prev >= 0.0)
            {
                ++nested_checked;
                if (!(w > prev + 1e-9))
                    ++nested_bad;
            }
            prev = w;
        }
    };

    for (int c = 0; c < 200; ++c)
    {
        const ClothoidArc arc = random_short_clothoid(rng);
        const SampledSpiral curve = arc.sample(400);
        const NormalizedEnds e = end_data(curve);
        if (vogt_sign(e.alpha, e.beta, e.kappa1, e.kappa2) != VogtSign::Consistent || !(std::abs(e.alpha + e.beta) > 1e-9))
            ++sign_bad;
        if (!short_bounds_check(e))
            ++bounds_bad;
        if (!is_short(curve))
            ++short_bad;
        check_nested(curve);
    }
    for (int c = 0; c < 20; ++c)
    {
        ClothoidArc arc;
        arc.a = rng.uniform(0.5, 2.0);
        arc.s0 = arc.a * rng.uniform(-3.0, 0.5);
        arc.s1 = arc.s0 + arc.a * rng.uniform(4.0, 7.0);
        check_nested(arc.sample(4000));
    }

    CriterionResult r;
    r.seconds = timer.seconds();
    r.pass = sign_bad == 0 && bounds_bad == 0 && short_bad == 0 && nested_bad == 0;
    std::ostringstream d;
    d << "sign violations " << sign_bad << "/200, range violations " << bounds_bad << "/200, not short "
      << short_bad << "/200, nested |w| non-increasing " << nested_bad << "/" << nested_checked;
    r.detail = d.str();
    return r;
}

CriterionResult counter_suite(std::uint64_t seed)
{
    Timer timer;
    Rng rng(seed + 4);
    int mismatched = 0, angle_bad = 0, accepted = 0;
    int histogram[3] = {0, 0, 0};
    double worst = 0.0;

    while (accepted < 30)
    {
        ClothoidArc arc;
        arc.a = rng.uniform(0.5, 2.0);
        arc.s0 = arc.a * rng.uniform(-4.0, 0.5);
        arc.s1 = arc.a * rng.uniform(1.0, 4.5);
        const SampledSpiral curve = arc.sample(3000);
        const ChordCounters cc = chord_counters(curve);
        const int n = std::max(cc.N1, cc.N2);
        if (n > 2 || histogram[n] >= 12)
            continue;
        ++histogram[n];
        ++accepted;
        if (!cc.consistent())
            ++mismatched;
        const CumulativeAngles ca = cumulative_angles(curve);
        const NormalizedEnds e = end_data(curve);
        const double dev = std::max(std::abs(ca.alpha_tilde - (e.alpha + kTwoPi * cc.N1)),
                                    std::abs(ca.beta_tilde - (e.beta + kTwoPi * cc.N2)));
        worst = std::max(worst, dev);
        if (dev > 1e-6)
            ++angle_bad;
    }

    CriterionResult r;
    r.seconds = timer.seconds();
    r.pass = mismatched == 0 && angle_bad == 0 && histogram[0] > 0 && histogram[1] > 0 && histogram[2] > 0;
    std::ostringstream d;
    d << "N!=M " << mismatched << "/30, angle dev > 1e-6 " << angle_bad << " (max " << worst << "), N histogram "
      << histogram[0] << "/" << histogram[1] << "/" << histogram[2];
    r.detail = d.str();
    return r;
}

CriterionResult biarc_suite(std::uint64_t seed)
{
    Timer timer;
    Rng rng(seed + 5);
    double locus = 0.0, roundtrip = 0.0, flat = 0.0, closed = 0.0;
    int non_monotone = 0;

    auto random_lense = [&](double range) {
        for (;;)
        {
            const LenseSpec l{rng.uniform(-range, range), rng.uniform(-range, range)};
            if (std::abs(std::sin(l.omega())) > 0.05 && std::abs(l.alpha - l.beta) > 0.05)
                return l;
        }
    };

    for (int i = 0; i < 500; ++i)
    {
        const BiarcSpec spec{random_lense(3.0), rng.log_uniform(1e-2, 1e2)};
        const Point t = contact_point(spec);
        locus = std::max(locus, std::abs(circle_side(t, gamma_circle(spec.lense))));
        roundtrip = std::max(roundtrip, std::abs(b_through_point(spec.lense, t) - spec.b) / spec.b);
    }

    for (int i = 0; i < 50; ++i)
    {
        const LenseSpec l = random_lense(1.5);
        int dir = 0;
        double prev = 0.0;
        for (int j = 0; j < 64; ++j)
        {
            const double b = std::pow(10.0, -3.0 + 6.0 * j / 63.0);
            const double len = biarc_length({l, b});
            if (j > 0)
            {
                const int step = (len > prev) ? 1 : (len < prev ? -1 : 0);
                if (step == 0 || (dir != 0 && step != dir))
                {
                    ++non_monotone;
                    break;
                }
                dir = step;
            }
            prev = len;
        }
    }

    for (int i = 0; i < 50; ++i)
    {
        const double w = rng.uniform(0.05, 3.0) * (rng.coin() ? 1.0 : -1.0);
        const double expect = 2.0 * w / std::sin(w);
        for (int j = 0; j < 64; ++j)
        {
            const double len = biarc_length({{w, w}, std::pow(10.0, -3.0 + 6.0 * j / 63.0)});
            flat = std::max(flat, std::abs(len - expect));
            closed = std::max(closed, std::abs(len - expect) / expect);
        }
    }

    CriterionResult r;
    r.seconds = timer.seconds();
    r.pass = locus < 1e-9 && roundtrip < 1e-8 && non_monotone == 0 && flat <= 1e-10 && closed <= 1e-10;
    std::ostringstream d;
    d << "locus " << locus << ", b round-trip " << roundtrip << ", non-monotone L " << non_monotone
      << "/50, alpha=beta spread " << flat << ", closed form " << closed;
    r.detail = d.str();
    return r;
}

CriterionResult containment_suite(std::uint64_t seed)
{
    Timer timer;
    Rng rng(seed + 6);
    long outside_lense = 0, outside_bilense = 0, b_decreasing = 0, errors = 0;

    for (int c = 0; c < 50; ++c)
    {
        const ClothoidArc arc = random_short_clothoid(rng);
        const CurvatureElement K1 = clothoid_element(arc.a, arc.s0);
        const CurvatureElement K2 = clothoid_element(arc.a, arc.s1);
        const auto [ends, sim] = normalize_pair(K1, K2);
        const LenseSpec lense{ends.alpha, ends.beta};
        double b_prev = -1.0;
        try
        {
            const auto [b1, b2] = bilense_bounds(ends);
            (void)b2;
            b_prev = b1;
        }
        catch (const Error&)
        {
            ++errors;
            continue;
        }
        for (int i = 0; i < 10000; ++i)
        {
            const double s = arc.s0 + (arc.s1 - arc.s0) * (i + 0.5) / 10000.0;
            const Point p = sim.apply(clothoid_element(arc.a, s).point());
            if (!in_lense(lense, p))
                ++outside_lense;
            if (!in_bilense(ends, p))
                ++outside_bilense;
            const double b = b_through_point(lense, p);
            if (b < b_prev - 1e-9)
                ++b_decreasing;
            b_prev = b;
        }
    }

    CriterionResult r;
    r.seconds = timer.seconds();
    r.pass = outside_lense == 0 && outside_bilense == 0 && b_decreasing == 0 && errors == 0;
    std::ostringstream d;
    d << "outside lense " << outside_lense << "/500000, outside bilense " << outside_bilense
      << ", b decreasing " << b_decreasing << ", no bilense " << errors;
    r.detail = d.str();
    return r;
}

CriterionResult construction_suite(std::uint64_t seed)
{
    Timer timer;
    Rng rng(seed + 7);
    int short_bad = 0, biarc_bad = 0, biarc_checked = 0, any_bad = 0;
    double worst_short = 0.0, worst_biarc = 0.0, worst_any = 0.0;

    for (int accepted = 0; accepted < 500;)
    {
        NormalizedEnds e;
        e.alpha = rng.uniform(-kPi, kPi);
        e.beta = rng.uniform(-kPi, kPi);
        e.kappa1 = rng.uniform(-4.0, 4.0);
        e.kappa2 = rng.uniform(-4.0, 4.0);
        if (exists_short(e).status != ExistenceStatus::SpiralFamily)
            continue;
        ++accepted;
        try
        {
            const MultiArcCurve chain = construct_short(e);
            double q = -1.0;
            for (std::size_t i = 0; i < chain.segments.size(); ++i)
                for (std::size_t j = i + 1; j < chain.segments.size(); ++j)
                    q = std::max(q, q_invariant(chain.segments[i].start, chain.segments[j].start));
            const double gap = std::max(element_gap(chain.start_element(), e.start()),
                                        element_gap(chain.end_element(), e.end()));
            worst_short = std::max(worst_short, gap);
            if (!chain.monotone_curvature() || q > 1e-9 || gap > 1e-9 || chain.g1_defect() > 1e-9 ||
                !is_short(sample_chain(chain)))
                ++short_bad;
        }
        catch (const Error&)
        {
            ++short_bad;
        }
    }

    for (int i = 0; i < 200; ++i)
    {
        const BiarcSpec spec{{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)}, rng.log_uniform(0.1, 10.0)};
        if (std::abs(std::sin(spec.lense.omega())) < 0.05)
            continue;
        const BiarcCurvatures k = biarc_curvatures(spec);
        const NormalizedEnds e{spec.lense.alpha, spec.lense.beta, k.kappa1, k.kappa2, 1.0};
        if (exists_short(e).status != ExistenceStatus::UniqueBiarc)
            continue;
        ++biarc_checked;
        try
        {
            const MultiArcCurve got = construct_short(e);
            const MultiArcCurve want = build_biarc(spec);
            double gap = (got.segments.size() == want.segments.size()) ? 0.0 : 1.0;
            for (std::size_t j = 0; gap < 1.0 && j < got.segments.size(); ++j)
                gap = std::max({gap, element_gap(got.segments[j].start, want.segments[j].start),
                                std::abs(got.segments[j].length - want.segments[j].length)});
            worst_biarc = std::max(worst_biarc, gap);
            if (gap > 1e-9)
                ++biarc_bad;
        }
        catch (const Error&)
        {
            ++biarc_bad;
        }
    }

    for (int accepted = 0; accepted < 200;)
    {
        CurvatureElement K1 = rng.element(3.0, 2.0);
        const CurvatureElement K2 = rng.element(3.0, 2.0);
        if (rng.coin(0.1))
            K1.k = 0.0;
        if (distance(K1.point(), K2.point()) < 1e-3 || exists_any(K1, K2).status != ExistenceStatus::SpiralFamily)
            continue;
        ++accepted;
        try
        {
            const MultiArcCurve chain = construct_any(K1, K2);
            const double gap = std::max(element_gap(chain.start_element(), K1), element_gap(chain.end_element(), K2));
            worst_any = std::max(worst_any, gap);
            if (gap > 1e-8 || !chain.monotone_curvature() || chain.g1_defect() > 1e-8)
                ++any_bad;
        }
        catch (const Error&)
        {
            ++any_bad;
        }
    }

    CriterionResult r;
    r.seconds = timer.seconds();
    r.pass = short_bad == 0 && biarc_bad == 0 && biarc_checked > 0 && any_bad == 0 && r.seconds < 20.0;
    std::ostringstream d;
    d << "short unsound " << short_bad << "/500 (max end gap " << worst_short << "), biarc mismatch " << biarc_bad
      << "/" << biarc_checked << " (max " << worst_biarc << "), any unsound " << any_bad << "/200 (max "
      << worst_any << ")";
    r.detail = d.str();
    return r;
}

CriterionResult envelope_suite(std::uint64_t)
{
    Timer timer;
    const double a = 1.0, s0 = 0.5, s1 = 2.0;
    std::vector<double> log_h, log_w;
    long uncovered = 0;
    bool monotone = true;

    for (int chords : {8, 16, 32, 64})
    {
        InterpolationData data;
        for (int i = 0; i <= chords; ++i)
            data.points.push_back(clothoid_element(a, s0 + (s1 - s0) * i / chords).point());
        data.tau_start = clothoid_element(a, s0).tau;
        data.tau_end = clothoid_element(a, s1).tau;
        const LenseChain chain = build_lense_chain(data);
        monotone = monotone && chain.monotone();
        log_h.push_back(std::log((s1 - s0) / chords));
        log_w.push_back(std::log(chain.max_width()));
        for (int i = 0; i <= 4000; ++i)
            if (!in_envelope(chain, clothoid_element(a, s0 + (s1 - s0) * i / 4000.0).point()))
                ++uncovered;
    }

    const double mh = (log_h[0] + log_h[1] + log_h[2] + log_h[3]) / 4.0;
    const double mw = (log_w[0] + log_w[1] + log_w[2] + log_w[3]) / 4.0;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
    {
        num += (log_h[i] - mh) * (log_w[i] - mw);
        den += (log_h[i] - mh) * (log_h[i] - mh);
    }
    const double order = num / den;

    CriterionResult r;
    r.seconds = timer.seconds();
    r.pass = std::abs(order - 3.0) <= 0.3 && uncovered == 0 && monotone;
    std::ostringstream d;
    d << "width order " << order << ", uncovered " << uncovered << "/16004, monotone curvatures "
      << (monotone ? "yes" : "no");
    r.detail = d.str();
    return r;
}

CriterionResult fresnel_suite(std::uint64_t)
{
    Timer timer;
    const double c1 = std::abs(fresnel(1.0).C - 0.7798934);
    double overlap = 0.0;
    for (int i = 0; i <= 400; ++i)
    {
        const double t = 1.4 + 0.4 * i / 400.0;
        const FresnelValue s = fresnel_series(t), f = fresnel_auxiliary(t);
        overlap = std::max({overlap, std::abs(s.C - f.C), std::abs(s.S - f.S)});
    }
    CriterionResult r;
    r.seconds = timer.seconds();
    r.pass = c1 < 1e-6 && overlap < 1e-9;
    std::ostringstream d;
    d << "|C(1) - 0.7798934| = " << c1 << ", branch gap on [1.4,1.8] " << overlap;
    r.detail = d.str();
    return r;
}

struct Entry
{
    const char* name;
    CriterionResult (*run)(std::uint64_t);
};

const Entry kEntries[kCriterionCount] = {
    {"Q invariance", q_invariance},
    {"spiral non-positivity", spiral_nonpositivity},
    {"short and long Vogt", vogt_suite},
    {"counter equality", counter_suite},
    {"biarc family", biarc_suite},
    {"lense and bilense containment", containment_suite},
    {"existence and construction", construction_suite},
    {"envelope order and coverage", envelope_suite},
    {"Fresnel oracle", fresnel_suite},
};

} // namespace

CriterionResult run_criterion(int id, std::uint64_t seed)
{
    if (id < 1 || id > kCriterionCount)
        throw Error(ErrorKind::InvalidInput, "criterion id out of range");
    const Entry& e = kEntries[id - 1];
    CriterionResult r;
    try
    {
        r = e.run(seed);
    }
    catch (const std::exception& ex)
    {
        r.pass = false;
        r.detail = std::string("exception: ") + ex.what();
    }
    r.id = id;
    r.name = e.name;
    return r;
}

std::vector<CriterionResult> run_all(std::uint64_t seed, bool parallel)
{
    std::vector<CriterionResult> out;
    if (!parallel)
    {
        for (int id = 1; id <= kCriterionCount; ++id)
            out.push_back(run_criterion(id, seed));
        return out;
    }
    std::vector<std::future<CriterionResult>> jobs;
    for (int id = 1; id <= kCriterionCount; ++id)
        jobs.push_back(std::async(std::launch::async, run_criterion, id, seed));
    for (auto& j : jobs)
        out.push_back(j.get());
    return out;
}

} // namespace spiralkit::selftest

#include "spiralkit/cli.hpp"

#include "spiralkit/biarc.hpp"
#include "spiralkit/clothoid.hpp"
#include "spiralkit/construct.hpp"
#include "spiralkit/envelope.hpp"
#include "spiralkit/json_io.hpp"
#include "spiralkit/selftest.hpp"
#include "spiralkit/svg.hpp"
#include "spiralkit/vogt.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace spiralkit::cli
{

using json_io::json;

int exit_code(ErrorKind kind)
{
    switch (kind)
    {
    case ErrorKind::InvalidInput:
    case ErrorKind::CoincidentEndpoints:
    case ErrorKind::PolePoint:
    case ErrorKind::DegenerateTriple:
        return 2;
    case ErrorKind::ResolutionTooCoarse:
        return 4;
    default:
        return 3;
    }
}

namespace
{

std::vector<double> parse_numbers(const std::string& text, std::size_t count, const char* what)
{
    std::string body = text;
    const auto first = body.find_first_not_of(" \t");
    const auto last = body.find_last_not_of(" \t");
    body = (first == std::string::npos) ? std::string() : body.substr(first, last - first + 1);
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);

    std::vector<double> out;
    std::stringstream ss(body);
    std::string field;
    while (std::getline(ss, field, ','))
        out.push_back(parse_extended(field));
    if (out.size() != count)
        throw Error(ErrorKind::InvalidInput, std::string("expected ") + what + ", got \"" + text + "\"");
    for (double v : out)
        if (!std::isfinite(v))
            throw Error(ErrorKind::InvalidInput, std::string(what) + " must be finite");
    return out;
}

} // namespace

double parse_extended(const std::string& text)
{
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '\t')
            t += c;
    if (t == "inf" || t == "+inf" || t == "infinity")
        return std::numeric_limits<double>::infinity();
    if (t == "-inf" || t == "-infinity")
        return -std::numeric_limits<double>::infinity();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v))
        throw Error(ErrorKind::InvalidInput, "not a number: \"" + text + "\"");
    return v;
}

CurvatureElement parse_element(const std::string& text)
{
    const auto v = parse_numbers(text, 4, "(x,y,tau,k)");
    return {v[0], v[1], v[2], v[3]};
}

Point parse_point(const std::string& text)
{
    const auto v = parse_numbers(text, 2, "(x,y)");
    return {v[0], v[1]};
}

namespace
{

struct Output
{
    std::string json_path;
    std::string svg_path;

    void emit(const json& j) const
    {
        if (json_path.empty())
        {
            std::cout << j.dump() << '\n';
            return;
        }
        std::ofstream f(json_path);
        if (!f)
            throw Error(ErrorKind::InvalidInput, "cannot write " + json_path);
        f << j.dump() << '\n';
    }

    void figure(const SvgDocument& doc) const
    {
        if (!svg_path.empty())
            doc.save(svg_path);
    }
};

struct EndsArgs
{
    std::optional<double> alpha, beta, kappa1, kappa2;
    std::string k1, k2;

    void attach(CLI::App* cmd, bool curvatures)
    {
        cmd->add_option("--alpha", alpha, "Start tangent angle relative to the chord");
        cmd->add_option("--beta", beta, "End tangent angle relative to the chord");
        if (curvatures)
        {
            cmd->add_option("--kappa1", kappa1, "Normalized start curvature");
            cmd->add_option("--kappa2", kappa2, "Normalized end curvature");
            cmd->add_option("--k1", k1, "Start element (x,y,tau,k)");
            cmd->add_option("--k2", k2, "End element (x,y,tau,k)");
        }
    }

    bool has_elements() const { return !k1.empty() || !k2.empty(); }

    std::pair<CurvatureElement, CurvatureElement> elements() const
    {
        if (k1.empty() || k2.empty())
            throw Error(ErrorKind::InvalidInput, "both --k1 and --k2 are required");
        return {parse_element(k1), parse_element(k2)};
    }

    LenseSpec lense() const
    {
        if (!alpha || !beta)
            throw Error(ErrorKind::InvalidInput, "--alpha and --beta are required");
        return {*alpha, *beta};
    }

    NormalizedEnds ends() const
    {
        if (has_elements())
        {
            const auto [a, b] = elements();
            return normalize_pair(a, b).first;
        }
        if (!alpha || !beta || !kappa1 || !kappa2)
            throw Error(ErrorKind::InvalidInput, "give --alpha --beta --kappa1 --kappa2 or --k1 --k2");
        return {*alpha, *beta, *kappa1, *kappa2, 1.0};
    }
};

json verdict_json(const ExistenceVerdict& v)
{
    return {{"status", to_string(v.status)}, {"Q", v.q_value}, {"reason", to_string(v.reason)}};
}

json lense_json(const LenseSpec& l)
{
    return {{"alpha", l.alpha}, {"beta", l.beta}, {"omega", l.omega()}, {"gamma", l.gamma()}};
}

json extended(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return v;
}

void draw_lense(SvgDocument& doc, const LenseSpec& l)
{
    for (double xi : {l.alpha, -l.beta})
    {
        const CurvatureElement a = boundary_arc(xi);
        if (std::abs(std::sin(xi)) > 1e-12 || std::cos(xi) > 0.0)
            doc.add_arc(a, arc_length_to(a, {1.0, 0.0}), "lense");
    }
    doc.add_marker({-1.0, 0.0}, "point");
    doc.add_marker({1.0, 0.0}, "point");
}

std::vector<double> fan_values(int count)
{
    std::vector<double> out;
    for (int i = 0; i < count; ++i)
        out.push_back(std::pow(10.0, count == 1 ? 0.0 : -2.0 + 4.0 * i / (count - 1)));
    return out;
}

} // namespace

int run(int argc, char** argv)
{
    CLI::App app{"Spiral arcs, lenses and biarcs"};
    app.require_subcommand(1);
    Output out;
    app.add_option("-o,--output", out.json_path, "Write JSON here instead of stdout");
    app.add_option("--svg", out.svg_path, "Write an SVG figure");

    EndsArgs q_args, exists_args, construct_args, bilense_args, lense_args, biarc_args, fan_args;
    auto* q_cmd = app.add_subcommand("q", "Inversive invariant of two elements or of normalized end data");
    q_args.attach(q_cmd, true);

    auto* vogt_cmd = app.add_subcommand("vogt", "Cumulative angles, counters and shortness of a sampled curve");
    std::string vogt_input;
    bool vogt_circular = false;
    vogt_cmd->add_option("--input", vogt_input, "Sampled curve JSON")->required();
    vogt_cmd->add_flag("--circular", vogt_circular, "Accept constant curvature");

    auto* biarc_cmd = app.add_subcommand("biarc", "Biarc B(b) of a lense");
    biarc_args.attach(biarc_cmd, false);
    std::string b_text = "1";
    biarc_cmd->add_option("--b", b_text, "Family parameter (may be inf)");

    auto* fan_cmd = app.add_subcommand("biarc-fan", "Family of biarcs over a grid of b");
    fan_args.attach(fan_cmd, false);
    int fan_count = 9;
    fan_cmd->add_option("--count", fan_count, "Number of b values")->check(CLI::Range(1, 1000));

    auto* lense_cmd = app.add_subcommand("lense", "Lense membership");
    lense_args.attach(lense_cmd, false);
    std::string lense_point;
    lense_cmd->add_option("--point", lense_point, "Query point (x,y)");

    auto* bilense_cmd = app.add_subcommand("bilense", "Bilense bounds and membership");
    bilense_args.attach(bilense_cmd, true);
    std::string bilense_point;
    bilense_cmd->add_option("--point", bilense_point, "Query point (x,y)");

    auto* exists_cmd = app.add_subcommand("exists", "Existence verdicts for short and arbitrary spirals");
    exists_args.attach(exists_cmd, true);

    auto* construct_cmd = app.add_subcommand("construct", "Three-arc spiral joining the end data");
    construct_args.attach(construct_cmd, true);

    auto* envelope_cmd = app.add_subcommand("envelope", "Lense chain of interpolation points");
    std::string envelope_input, envelope_point;
    envelope_cmd->add_option("--input", envelope_input, "Interpolation JSON")->required();
    envelope_cmd->add_option("--point", envelope_point, "Query point (x,y)");

    auto* clothoid_cmd = app.add_subcommand("clothoid", "Sampled clothoid k = s/a^2");
    ClothoidSpec cspec;
    clothoid_cmd->add_option("--a", cspec.a, "Curvature rate parameter");
    clothoid_cmd->add_option("--s-min", cspec.s_min, "First arclength");
    clothoid_cmd->add_option("--s-max", cspec.s_max, "Last arclength");
    clothoid_cmd->add_option("--n", cspec.n, "Sample count");

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance property suites");
    std::vector<int> criteria;
    bool serial = false;
    selftest_cmd->add_option("--criterion", criteria, "Run only these criteria")->check(CLI::Range(1, 9));
    selftest_cmd->add_flag("--serial", serial, "Run on one thread");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << json{{"error", "InvalidInput"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    }

    try
    {
        if (q_cmd->parsed())
        {
            if (q_args.has_elements())
            {
                const auto [a, b] = q_args.elements();
                out.emit({{"Q", q_invariant(a, b)}});
            }
            else
                out.emit({{"Q", q_normalized(q_args.ends())}});
        }
        else if (vogt_cmd->parsed())
        {
            const SampledSpiral curve = json_io::read_spiral(json_io::load_file(vogt_input), vogt_circular);
            const CumulativeAngles ca = cumulative_angles(curve);
            const ChordCounters cc = chord_counters(curve);
            const NormalizedEnds e = end_data(curve);
            const char* mono = curve.monotonicity() == Monotonicity::Increasing
                                   ? "increasing"
                                   : (curve.monotonicity() == Monotonicity::Decreasing ? "decreasing" : "constant");
            out.emit({{"alpha_tilde", ca.alpha_tilde},
                      {"beta_tilde", ca.beta_tilde},
                      {"omega_tilde", ca.omega_tilde},
                      {"rho", ca.rho},
                      {"alpha", e.alpha},
                      {"beta", e.beta},
                      {"N1", cc.N1},
                      {"N2", cc.N2},
                      {"M1", cc.M1},
                      {"M2", cc.M2},
                      {"chord_crossings", cc.chord_crossings},
                      {"short", cc.M1 == 0 && cc.M2 == 0},
                      {"monotonicity", mono},
                      {"winding_bounds", winding_bounds_check(ca, curve.has_inflection())}});
        }
        else if (biarc_cmd->parsed())
        {
            const BiarcSpec spec{biarc_args.lense(), parse_extended(b_text)};
            const BiarcCurvatures k = biarc_curvatures(spec);
            const MultiArcCurve curve = build_biarc(spec);
            out.emit({{"b", extended(spec.b)},
                      {"T", json_io::to_json(contact_point(spec))},
                      {"tau0", junction_tangent(spec)},
                      {"kappa1", extended(k.kappa1)},
                      {"kappa2", extended(k.kappa2)},
                      {"L", biarc_length(spec)},
                      {"curve", json_io::to_json(curve)}});
            SvgDocument doc;
            draw_lense(doc, spec.lense);
            doc.add_full_circle(gamma_circle(spec.lense), "gamma-circle");
            doc.add_chain(curve, "spiral");
            out.figure(doc);
        }
        else if (fan_cmd->parsed())
        {
            const LenseSpec lense = fan_args.lense();
            SvgDocument doc;
            draw_lense(doc, lense);
            doc.add_full_circle(gamma_circle(lense), "gamma-circle");
            json rows = json::array();
            for (double b : fan_values(fan_count))
            {
                const BiarcSpec spec{lense, b};
                const MultiArcCurve curve = build_biarc(spec);
                doc.add_chain(curve, "arc");
                doc.add_marker(contact_point(spec), "point");
                rows.push_back({{"b", b}, {"T", json_io::to_json(contact_point(spec))}, {"L", biarc_length(spec)}});
            }
            out.emit({{"lense", lense_json(lense)}, {"b_star", b_star(lense)}, {"biarcs", rows}});
            out.figure(doc);
        }
        else if (lense_cmd->parsed())
        {
            const LenseSpec lense = lense_args.lense();
            json j = lense_json(lense);
            SvgDocument doc;
            draw_lense(doc, lense);
            if (!lense_point.empty())
            {
                const Point p = parse_point(lense_point);
                j["point"] = json_io::to_json(p);
                j["xi"] = lense_parameter(p);
                j["in_lense"] = in_lense(lense, p);
                doc.add_marker(p, "point");
            }
            out.emit(j);
            out.figure(doc);
        }
        else if (bilense_cmd->parsed())
        {
            const NormalizedEnds e = bilense_args.ends();
            const auto [b1, b2] = bilense_bounds(e);
            const LenseSpec lense{e.alpha, e.beta};
            json j = lense_json(lense);
            j["b1"] = b1;
            j["b2"] = b2;
            SvgDocument doc;
            draw_lense(doc, lense);
            doc.add_chain(build_biarc({lense, b1}), "bilense");
            doc.add_chain(build_biarc({lense, b2}), "bilense");
            if (!bilense_point.empty())
            {
                const Point p = parse_point(bilense_point);
                j["point"] = json_io::to_json(p);
                j["b"] = extended(b_through_point(lense, p));
                j["in_lense"] = in_lense(lense, p);
                j["in_bilense"] = in_bilense(e, p);
                doc.add_marker(p, "point");
            }
            out.emit(j);
            out.figure(doc);
        }
        else if (exists_cmd->parsed())
        {
            const NormalizedEnds e = exists_args.ends();
            const ExistenceVerdict v = exists_short(e);
            json j = verdict_json(v);
            if (exists_args.has_elements())
            {
                const auto [a, b] = exists_args.elements();
                j["any"] = verdict_json(exists_any(a, b));
            }
            else
                j["any"] = verdict_json(exists_any(e.start(), e.end()));
            out.emit(j);
        }
        else if (construct_cmd->parsed())
        {
            SvgDocument doc;
            if (construct_args.has_elements())
            {
                const auto [a, b] = construct_args.elements();
                const MultiArcCurve curve = construct_any(a, b);
                out.emit(json_io::to_json(curve));
                doc.add_full_circle(a, "arc");
                doc.add_full_circle(b, "arc");
                doc.add_chain(curve, "spiral");
            }
            else
            {
                const NormalizedEnds e = construct_args.ends();
                const MultiArcCurve curve = construct_short(e);
                out.emit(json_io::to_json(curve));
                draw_lense(doc, {e.alpha, e.beta});
                doc.add_chain(curve, "spiral");
            }
            out.figure(doc);
        }
        else if (envelope_cmd->parsed())
        {
            const InterpolationData data = json_io::read_interpolation(json_io::load_file(envelope_input));
            const LenseChain chain = build_lense_chain(data);
            SvgDocument doc;
            json chords = json::array();
            for (std::size_t i = 0; i < chain.chords.size(); ++i)
            {
                const ChordLense& c = chain.chords[i];
                json row = lense_json(c.lense);
                row["width"] = c.width;
                row["very_short_violation"] = c.very_short_violation;
                row["degenerate"] = c.degenerate;
                chords.push_back(row);
                const Similarity back = c.to_normalized.inverse();
                for (double xi : {c.lense.alpha, -c.lense.beta})
                {
                    const CurvatureElement a = back.apply(boundary_arc(xi));
                    doc.add_arc(a, arc_length_to(a, data.points[i + 1]), "lense");
                }
            }
            for (Point p : data.points)
                doc.add_marker(p, "point");
            json j{{"curvatures", chain.curvatures()},
                   {"monotone", chain.monotone()},
                   {"max_width", chain.max_width()},
                   {"chords", chords}};
            if (!envelope_point.empty())
                j["in_envelope"] = in_envelope(chain, parse_point(envelope_point));
            out.emit(j);
            out.figure(doc);
        }
        else if (clothoid_cmd->parsed())
        {
            out.emit(json_io::to_json(sample_clothoid(cspec)));
        }
        else if (selftest_cmd->parsed())
        {
            const std::uint64_t seed = selftest::seed_from_env();
            std::vector<selftest::CriterionResult> results;
            if (criteria.empty())
                results = selftest::run_all(seed, !serial);
            else
                for (int id : criteria)
                    results.push_back(selftest::run_criterion(id, seed));
            json rows = json::array();
            bool all = true;
            for (const auto& r : results)
            {
                all = all && r.pass;
                rows.push_back(
                    {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
            }
            out.emit({{"seed", seed}, {"criteria", rows}, {"pass", all}});
            return all ? 0 : 1;
        }
        return 0;
    }
    catch (const Error& e)
    {
        std::cerr << json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << '\n';
        return exit_code(e.kind());
    }
}

} // namespace spiralkit::cli

#include "latpath/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latpath/bijections.hpp"
#include "latpath/errors.hpp"
#include "latpath/formulas.hpp"
#include "latpath/oracle.hpp"
#include "latpath/verify.hpp"

namespace latpath::cli {

namespace {

using nlohmann::json;

std::int64_t parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used == text.size()) {
            return v;
        }
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("malformed ") + what + " '" + text + "'");
}

Point parse_point(const std::string& text, const char* what) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw ValidationError(std::string(what) + " must be written x,y, got '" + text + "'");
    }
    return {parse_int(text.substr(0, comma), what), parse_int(text.substr(comma + 1), what)};
}

BoundaryLine parse_line(const std::string& slope, const std::string& intercept) {
    const Rational r = Rational::parse(intercept);
    if (slope.rfind("1/", 0) == 0) {
        return BoundaryLine::inverse_slope(parse_int(slope.substr(2), "slope"), r);
    }
    return BoundaryLine::integer_slope(parse_int(slope, "slope"), r);
}

std::string slope_text(const BoundaryLine& line) {
    return (line.slope_kind == SlopeKind::Inverse ? "1/" : "") + std::to_string(line.k);
}

json point_json(Point p) { return json::array({p.x, p.y}); }

struct QueryFlags {
    std::string slope = "1";
    std::string intercept = "0";
    std::string from = "0,0";
    std::string to;
    bool strict = false;
    bool weak = false;

    void attach(CLI::App* app, bool need_to) {
        app->add_option("--slope", slope, "k for y = kx - r, or 1/k for y = x/k - r");
        app->add_option("--intercept", intercept, "rational r, written p/q or as an integer");
        app->add_option("--from", from, "start point a,b");
        auto* to_opt = app->add_option("--to", to, "end point m,n");
        if (need_to) {
            to_opt->required();
        }
        auto* s = app->add_flag("--strict", strict, "stay strictly above the line");
        auto* w = app->add_flag("--weak", weak, "stay on or above the line (default)");
        s->excludes(w);
    }

    PathQuery query() const {
        const Point a = parse_point(from, "--from");
        const Point e = parse_point(to, "--to");
        return {a.x, a.y, e.x, e.y, parse_line(slope, intercept),
                strict ? Strictness::Strict : Strictness::Weak};
    }
};

json query_json(const PathQuery& q) {
    return {{"slope", slope_text(q.boundary)},
            {"intercept", q.boundary.r.str()},
            {"from", point_json(q.start())},
            {"to", point_json(q.end())},
            {"strictness", q.strictness == Strictness::Strict ? "strict" : "weak"}};
}

/// Validates a path query for counting/enumeration. Invalid queries are
/// rejected; relaxed-but-valid ones get a warning.
void screen(const PathQuery& q, std::ostream& err) {
    const QueryValidation v = validate_query(q);
    if (v.cls == QueryClass::Invalid) {
        throw ValidationError("invalid query (" + to_string(q) + "): " + v.reason);
    }
    if (v.cls == QueryClass::OutsideStatedConditions) {
        err << "warning: " << v.reason
            << "; query is boundary-valid and evaluated with the relaxed conditions\n";
    }
}

class Session {
public:
    Session(std::ostream& err, const bool& as_json) : err_(err), as_json_(as_json) {}

    std::ostream& err() { return err_; }
    bool as_json() const { return as_json_; }
    std::ostringstream& text() { return text_; }
    json& doc() { return doc_; }

    void finish(std::ostream& out, const std::string& out_path, bool ok) {
        std::string content;
        if (as_json_) {
            doc_["ok"] = ok;
            content = doc_.dump(2) + "\n";
        } else {
            content = text_.str();
        }
        out << content;
        if (!out_path.empty()) {
            std::ofstream file(out_path);
            if (!file) {
                throw ValidationError("cannot open --out file '" + out_path + "'");
            }
            file << content;
        }
    }

private:
    std::ostream& err_;
    const bool& as_json_;
    std::ostringstream text_;
    json doc_ = json::object();
};

bool cmd_count(Session& s, const QueryFlags& flags, bool with_oracle) {
    const PathQuery q = flags.query();
    screen(q, s.err());
    const Count value = count_paths(q);
    s.doc() = {{"command", "count"}, {"parameters", query_json(q)}, {"result", value.str()}};
    s.text() << value;
    bool ok = true;
    if (with_oracle) {
        const Count expected = oracle::dp_count(q);
        ok = value == expected;
        s.doc()["oracle"] = expected.str();
        s.doc()["match"] = ok;
        s.text() << " oracle " << expected << (ok ? " match" : " mismatch");
    }
    s.text() << '\n';
    return ok;
}

bool cmd_enumerate(Session& s, const QueryFlags& flags) {
    const PathQuery q = flags.query();
    screen(q, s.err());
    const auto paths = oracle::enumerate_paths(q);
    json listed = json::array();
    for (const auto& p : paths) {
        listed.push_back(p.encode());
        s.text() << p.encode() << '\n';
    }
    s.doc() = {{"command", "enumerate"},
               {"parameters", query_json(q)},
               {"results", listed},
               {"count", std::to_string(paths.size())}};
    return true;
}

struct KoroljukFlags {
    std::int64_t p = 1;
    std::int64_t c = 1;
    std::int64_t m = 1;
    std::int64_t n = 1;
    std::string form = "reduced";
};

bool cmd_koroljuk(Session& s, const KoroljukFlags& f) {
    const KoroljukQuery q{f.p, f.c, f.m, f.n};
    s.doc() = {{"command", "koroljuk"},
               {"parameters", {{"p", f.p}, {"c", f.c}, {"m", f.m}, {"n", f.n}, {"form", f.form}}}};
    if (f.form == "literal" || f.form == "reduced") {
        const Count v = f.form == "literal" ? koroljuk_literal(q) : koroljuk_reduced(q);
        s.doc()["result"] = v.str();
        s.text() << v << '\n';
        return true;
    }
    const Count literal = koroljuk_literal(q);
    const Count reduced = koroljuk_reduced(q);
    const bool agree = literal == reduced;
    s.doc()["results"] = {{"literal", literal.str()}, {"reduced", reduced.str()}};
    s.doc()["agree"] = agree;
    s.text() << literal << ' ' << reduced << (agree ? " agree" : " disagree") << '\n';
    return agree;
}

bool cmd_bohm(Session& s, const BohmQuery& q) {
    const Count v = bohm(q);
    s.doc() = {{"command", "bohm"},
               {"parameters",
                {{"rise", q.rise}, {"start", q.start_alt}, {"end", q.end_alt}, {"ups", q.ups}}},
               {"result", v.str()}};
    s.text() << v << '\n';
    return true;
}

bool cmd_niederhausen(Session& s, std::int64_t k, const std::string& d, std::int64_t m,
                      std::int64_t n) {
    const NiederhausenQuery q{k, Rational::parse(d), m, n};
    const QueryValidation v = validate_niederhausen(q);
    if (v.cls != QueryClass::InDomain) {
        throw ValidationError("niederhausen query " + std::string(to_string(v.cls)) + ": " + v.reason);
    }
    const Count value = niederhausen(q);
    s.doc() = {{"command", "niederhausen"},
               {"parameters", {{"k", k}, {"d", q.d.str()}, {"m", m}, {"n", n}}},
               {"result", value.str()}};
    s.text() << value << '\n';
    return true;
}

struct TransformFlags {
    std::string map;
    std::string path;
    std::string slope = "1";
    std::string intercept = "0";
    std::string from = "0,0";
    std::int64_t p = 1;
    std::int64_t c = 1;
};

LatticePath apply_transform(const TransformFlags& f) {
    using namespace bijections;
    if (f.map == "koroljuk-to-unit" || f.map == "bohm-rotate") {
        const LatticePath src = LatticePath::parse({0, 0}, StepSet::koroljuk(f.p), f.path);
        return f.map == "bohm-rotate" ? bohm_rotate(src, f.c) : koroljuk_to_unit(src, f.c);
    }
    if (f.map == "unit-to-koroljuk") {
        const LatticePath src = LatticePath::parse({0, 0}, StepSet::unit(), f.path);
        const std::int64_t n = src.count_of(StepSet::unit().first());
        const std::int64_t m = src.count_of(StepSet::unit().second());
        return unit_to_koroljuk(src, BoundaryLine::integer_slope(f.p, f.c + f.p * n - m), f.c);
    }
    const LatticePath src = LatticePath::parse(parse_point(f.from, "--from"), StepSet::unit(), f.path);
    const BoundaryLine line = parse_line(f.slope, f.intercept);
    if (f.map == "drop-one") {
        return drop_one(src, line);
    }
    if (f.map == "lemma-translate") {
        return lemma_translate(src, line);
    }
    if (f.map == "reflect-inverse") {
        return reflect_inverse(src, line);
    }
    throw ValidationError("unknown --map '" + f.map + "'");
}

bool cmd_transform(Session& s, const TransformFlags& f) {
    const LatticePath image = apply_transform(f);
    s.doc() = {{"command", "transform"},
               {"parameters", {{"map", f.map}, {"path", f.path}}},
               {"result", {{"path", image.encode()}, {"start", point_json(image.start())}}}};
    s.text() << image.encode() << " @ " << to_string(image.start()) << '\n';
    return true;
}

bool report_summaries(Session& s, const std::string& command, json params,
                      const std::vector<verify::Summary>& parts) {
    verify::Summary total;
    total.suite = "total";
    json listed = json::array();
    for (const auto& part : parts) {
        s.text() << part.to_text() << '\n';
        listed.push_back(part.to_json());
        total.merge(part);
    }
    s.text() << total.to_text() << '\n';
    s.doc() = {{"command", command},
               {"parameters", std::move(params)},
               {"results", listed},
               {"checks", total.checks},
               {"failures", total.failures}};
    return total.ok();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact lattice path enumeration under linear boundaries", "latpath"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::string out_path;
    app.add_flag("--json", as_json, "emit one JSON document");
    app.add_option("--out", out_path, "also write the output to this file");

    QueryFlags count_flags;
    bool with_oracle = false;
    auto* count = app.add_subcommand("count", "closed-form count for one query");
    count_flags.attach(count, true);
    count->add_flag("--oracle", with_oracle, "also run the brute-force oracle");

    QueryFlags enum_flags;
    auto* enumerate = app.add_subcommand("enumerate", "list every path of a query");
    enum_flags.attach(enumerate, true);

    KoroljukFlags kor;
    auto* koroljuk = app.add_subcommand("koroljuk", "paths with steps (1,1), (-p,1) meeting x = c");
    koroljuk->add_option("--p", kor.p)->required();
    koroljuk->add_option("--c", kor.c)->required();
    koroljuk->add_option("--m", kor.m)->required();
    koroljuk->add_option("--n", kor.n)->required();
    koroljuk->add_option("--form", kor.form)->check(CLI::IsMember({"literal", "reduced", "both"}));

    BohmQuery bq;
    auto* bohm_cmd = app.add_subcommand("bohm", "paths with steps (1,rise), (1,-1) above altitude 0");
    bohm_cmd->add_option("--rise", bq.rise)->required();
    bohm_cmd->add_option("--start", bq.start_alt)->required();
    bohm_cmd->add_option("--end", bq.end_alt)->required();
    bohm_cmd->add_option("--ups", bq.ups)->required();

    std::int64_t nk = 1;
    std::string nd;
    std::int64_t nm = 0;
    std::int64_t nn = 0;
    auto* nieder = app.add_subcommand("niederhausen", "paths strictly above y = k(x - d)");
    nieder->add_option("--k", nk)->required();
    nieder->add_option("--d", nd)->required();
    nieder->add_option("--m", nm)->required();
    nieder->add_option("--n", nn)->required();

    TransformFlags tf;
    auto* transform = app.add_subcommand("transform", "apply a path bijection");
    transform
        ->add_option("--map", tf.map)
        ->required()
        ->check(CLI::IsMember({"drop-one", "lemma-translate", "reflect-inverse", "koroljuk-to-unit",
                               "unit-to-koroljuk", "bohm-rotate"}));
    transform->add_option("--path", tf.path)->required();
    transform->add_option("--slope", tf.slope);
    transform->add_option("--intercept", tf.intercept);
    transform->add_option("--from", tf.from, "start point of the input path");
    transform->add_option("--p", tf.p);
    transform->add_option("--c", tf.c);

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->require_subcommand(1);
    verify::SweepConfig sweep_cfg;
    std::int64_t extent = -1;
    auto* sweep = verify_cmd->add_subcommand("sweep", "closed forms vs oracle over a grid");
    sweep->add_option("--max-k", sweep_cfg.max_k);
    sweep->add_option("--max-extent", extent, "endpoint coordinates range over 0..E-1");
    sweep->add_option("--max-m", sweep_cfg.max_m);
    sweep->add_option("--max-n", sweep_cfg.max_n);
    sweep->add_option("--r-min", sweep_cfg.r_min);
    sweep->add_option("--r-max", sweep_cfg.r_max);
    std::size_t trials = 1000;
    std::size_t negation_trials = 500;
    std::uint64_t seed = verify::kDefaultSeed;
    auto* ident = verify_cmd->add_subcommand("identities", "identity and cross-formula checks");
    ident->add_option("--trials", trials, "random Hagen-Rothe triples");
    ident->add_option("--negation-trials", negation_trials, "random upper-negation pairs");
    ident->add_option("--seed", seed);
    std::int64_t max_steps = 10;
    auto* bij = verify_cmd->add_subcommand("bijections", "bijection image/injectivity/round trip");
    bij->add_option("--max-steps", max_steps);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    Session session(err, as_json);
    try {
        bool ok = true;
        if (count->parsed()) {
            ok = cmd_count(session, count_flags, with_oracle);
        } else if (enumerate->parsed()) {
            ok = cmd_enumerate(session, enum_flags);
        } else if (koroljuk->parsed()) {
            ok = cmd_koroljuk(session, kor);
        } else if (bohm_cmd->parsed()) {
            ok = cmd_bohm(session, bq);
        } else if (nieder->parsed()) {
            ok = cmd_niederhausen(session, nk, nd, nm, nn);
        } else if (transform->parsed()) {
            ok = cmd_transform(session, tf);
        } else if (sweep->parsed()) {
            if (extent >= 0) {
                sweep_cfg.max_m = extent - 1;
                sweep_cfg.max_n = extent - 1;
            }
            ok = report_summaries(session, "verify sweep",
                                  {{"max_k", sweep_cfg.max_k},
                                   {"r_min", sweep_cfg.r_min},
                                   {"r_max", sweep_cfg.r_max},
                                   {"max_m", sweep_cfg.max_m},
                                   {"max_n", sweep_cfg.max_n}},
                                  {verify::oracle_sweep(sweep_cfg),
                                   verify::shift_and_recurrence_sweep(sweep_cfg)});
        } else if (ident->parsed()) {
            ok = report_summaries(session, "verify identities",
                                  {{"trials", trials}, {"negation_trials", negation_trials}, {"seed", seed}},
                                  {verify::hagen_rothe_trials(trials, seed),
                                   verify::upper_negation_trials(negation_trials, seed),
                                   verify::koroljuk_forms(3, 8, 8, 4),
                                   verify::complement_grid(3, 8, 6, 4, 10),
                                   verify::niederhausen_grid(3, 6),
                                   verify::bohm_grid(3, 4, 5)});
        } else if (bij->parsed()) {
            ok = report_summaries(session, "verify bijections", {{"max_steps", max_steps}},
                                  {verify::bijection_suite(max_steps)});
        }
        session.finish(out, out_path, ok);
        return ok ? kExitOk : kExitMismatch;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitInvalid;
}

}  // namespace latpath::cli

// Command-line front end: emit any matrix or basis of the module pair, run
// the verification suites over ranges of d, compute Gram and transition
// matrices, and run recognition on shape-triple files.
//
// Exit status: 0 pass, 1 verification failure, 2 usage, 3 parse/shape,
// 4 recognition, 5 resource.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "uqsl2/uqsl2.hpp"

using namespace uqsl2;

namespace {

struct Options {
    std::string d_spec = "0";
    std::string backend = "symbolic";
    std::string q_value = "2";
    std::string scalars;
    std::string format = "text";
    std::string out_path;

    // emit
    std::string family;
    bool transposed = false, q_inverted = false, z_conjugated = false;
    std::string rep_spec;
    std::string basis_spec;
    bool triple = false;

    // verify
    std::string suite = "all";

    // transition / gram
    std::string space = "V";
    std::string from, to;
    std::string bv, bvdual;

    // recognize
    std::string in_path;
    std::string q_hint, b_hint;
};

/// Identifier tokens coming from command-line options surface as usage
/// errors; parse errors stay reserved for input documents.
template <class F>
auto usage_wrap(F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
}

std::pair<long, long> parse_d_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            long d = std::stol(s);
            return {d, d};
        }
        long lo = std::stol(s.substr(0, dots));
        long hi = std::stol(s.substr(dots + 2));
        if (lo > hi) throw UsageError("empty d range '" + s + "'");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw UsageError("cannot parse d or d range '" + s + "'");
    }
}

template <class S>
FreeScalars<S> parse_free_scalars(const std::string& text) {
    FreeScalars<S> fs;
    if (text.empty()) return fs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw UsageError("scalar assignment '" + item + "' is not key=value");
        std::string key = item.substr(0, eq);
        S val = usage_wrap([&] { return parse_scalar<S>(item.substr(eq + 1)); });
        if (key == "xy*") fs.xy = val;
        else if (key == "yz*") fs.yz = val;
        else if (key == "zx*") fs.zx = val;
        else if (key == "yx*") fs.yx = val;
        else if (key == "zy*") fs.zy = val;
        else
            throw UsageError("unknown scalar key '" + key +
                             "' (expected xy*, yz*, zx*, yx*, zy*)");
    }
    return fs;
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out_path);
    if (!f) throw UsageError("cannot open output path '" + opt.out_path + "'");
    f << text;
}

template <class S>
void emit_matrix(const Options& opt, const ExactMatrix<S>& m, json extra = {}) {
    if (opt.format == "table") {
        write_output(opt, matrix_to_table(m));
        return;
    }
    json j = matrix_to_json(m);
    for (auto& [k, v] : extra.items()) j[k] = v;
    write_output(opt, j.dump(2) + "\n");
}

template <class S>
int run_emit(const Options& opt, const QContext<S>& ctx) {
    auto [dlo, dhi] = parse_d_range(opt.d_spec);
    if (dlo != dhi) throw UsageError("emit takes a single d, not a range");
    const long d = dlo;
    if (!opt.family.empty()) {
        CanonicalFamily fam{usage_wrap([&] { return parse_family_base(opt.family); }),
                            opt.transposed, opt.q_inverted, opt.z_conjugated};
        emit_matrix(opt, build_canonical(ctx, fam, d), json{{"family", fam.str()}});
        return 0;
    }
    if (!opt.rep_spec.empty()) {
        std::stringstream ss(opt.rep_spec);
        std::string sp, ba, ge;
        if (!std::getline(ss, sp, ':') || !std::getline(ss, ba, ':') || !std::getline(ss, ge))
            throw UsageError("--rep expects SPACE:BASIS:GENERATOR, e.g. V:[y]row:x");
        Space s = usage_wrap([&] { return parse_space(sp); });
        BasisId b = usage_wrap([&] { return parse_basis(ba); });
        Gen g = usage_wrap([&] { return parse_gen(ge); });
        emit_matrix(opt, rep(ctx, s, b, g, d),
                    json{{"space", space_name(s)}, {"basis", b.str()}, {"generator", gen_name(g)}});
        return 0;
    }
    if (!opt.basis_spec.empty()) {
        std::stringstream ss(opt.basis_spec);
        std::string sp, ba;
        if (!std::getline(ss, sp, ':') || !std::getline(ss, ba))
            throw UsageError("--basis expects SPACE:BASIS, e.g. V:[y]row");
        Space s = usage_wrap([&] { return parse_space(sp); });
        BasisId b = usage_wrap([&] { return parse_basis(ba); });
        auto spec = make_spec(ctx, d, parse_free_scalars<S>(opt.scalars));
        emit_matrix(opt, basis_matrix(spec, s, b),
                    json{{"space", space_name(s)},
                         {"basis", b.str()},
                         {"note", "columns are the basis vectors in reference coordinates"}});
        return 0;
    }
    if (opt.triple) {
        // The diagonal / lower-bidiagonal / upper-bidiagonal triple of the
        // [x]row basis, as a recognizer input document.
        ShapeTriple<S> t;
        t.d = d;
        t.X = build_canonical(ctx, CanonicalFamily{FamilyBase::K}, d);
        t.Y = build_canonical(ctx, CanonicalFamily{FamilyBase::E, false, true, true}, d);
        t.Z = build_canonical(ctx, CanonicalFamily{FamilyBase::E}, d);
        write_output(opt, triple_to_json(t).dump(2) + "\n");
        return 0;
    }
    throw UsageError("emit needs one of --family, --rep, --basis or --triple; see --help");
}

template <class S>
int run_verify(const Options& opt, const QContext<S>& ctx) {
    auto [dlo, dhi] = parse_d_range(opt.d_spec);
    const auto fs = parse_free_scalars<S>(opt.scalars);
    const std::vector<std::string> known{"algebra",     "shape",   "flags",
                                         "gram",        "transitions", "rotator",
                                         "closedform",  "endo"};
    std::vector<std::string> selected;
    if (opt.suite == "all") selected = known;
    else {
        bool ok = false;
        for (auto& k : known) ok = ok || k == opt.suite;
        if (!ok)
            throw UsageError("unknown suite '" + opt.suite +
                             "' (expected all, algebra, shape, flags, gram, transitions, "
                             "rotator, closedform, endo)");
        selected = {opt.suite};
    }

    std::ostringstream report;
    size_t failures = 0, total = 0;
    for (long d = dlo; d <= dhi; ++d) {
        for (const auto& name : selected) {
            Report r;
            try {
                if (name == "algebra") r = suite_algebra(ctx, d);
                else if (name == "shape") r = suite_shape(ctx, d);
                else {
                    auto spec = make_spec(ctx, d, fs);
                    if (name == "flags") r = suite_flags(spec);
                    else if (name == "gram") r = suite_gram(spec);
                    else if (name == "transitions") r = suite_transitions(spec);
                    else if (name == "rotator") r = suite_rotator(spec);
                    else if (name == "closedform") r = suite_closedform(spec);
                    else r = suite_endo(spec);
                }
            } catch (const ResourceError& e) {
                throw ResourceError(std::string(e.what()) + " (suite " + name + ", d=" +
                                    std::to_string(d) + ")");
            }
            for (const auto& c : r.checks) {
                ++total;
                if (!c.pass) ++failures;
                report << (c.pass ? "PASS" : "FAIL") << " [" << name << " d=" << d << "] "
                       << c.name;
                if (!c.pass && !c.detail.empty()) report << " : " << c.detail;
                report << "\n";
            }
        }
    }
    report << (failures == 0 ? "OK" : "FAILED") << " " << (total - failures) << "/" << total
           << " checks passed\n";
    write_output(opt, report.str());
    return failures == 0 ? 0 : 1;
}

template <class S>
int run_transition(const Options& opt, const QContext<S>& ctx) {
    auto [dlo, dhi] = parse_d_range(opt.d_spec);
    if (dlo != dhi) throw UsageError("transition takes a single d, not a range");
    auto spec = make_spec(ctx, dlo, parse_free_scalars<S>(opt.scalars));
    Space s = usage_wrap([&] { return parse_space(opt.space); });
    BasisId from = usage_wrap([&] { return parse_basis(opt.from); });
    BasisId to = usage_wrap([&] { return parse_basis(opt.to); });
    emit_matrix(opt, transition(spec, s, from, to),
                json{{"space", space_name(s)}, {"from", from.str()}, {"to", to.str()}});
    return 0;
}

template <class S>
int run_gram(const Options& opt, const QContext<S>& ctx) {
    auto [dlo, dhi] = parse_d_range(opt.d_spec);
    if (dlo != dhi) throw UsageError("gram takes a single d, not a range");
    auto spec = make_spec(ctx, dlo, parse_free_scalars<S>(opt.scalars));
    BasisId bv = usage_wrap([&] { return parse_basis(opt.bv); });
    BasisId bw = usage_wrap([&] { return parse_basis(opt.bvdual); });
    emit_matrix(opt, gram(spec, bv, bw),
                json{{"basis_V", bv.str()}, {"basis_V_dual", bw.str()}});
    return 0;
}

template <class S>
int run_recognize(const Options& opt) {
    std::ifstream f(opt.in_path);
    if (!f) throw UsageError("cannot open input file '" + opt.in_path + "'");
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed triple document: ") + e.what());
    }
    auto triple = triple_from_json<S>(j);
    std::optional<S> q_hint, b_hint;
    if (!opt.q_hint.empty()) q_hint = usage_wrap([&] { return parse_scalar<S>(opt.q_hint); });
    if (!opt.b_hint.empty()) b_hint = usage_wrap([&] { return parse_scalar<S>(opt.b_hint); });
    auto res = recognize_triple(triple, q_hint, b_hint);
    json out = recognition_to_json(res);
    if (res.branch != Branch::underdetermined) {
        std::vector<ExactMatrix<S>> gens{res.X, res.Y, res.Z};
        if (res.branch == Branch::quantum)
            gens = with_nilpotent_combinations(res.q.value(), res.X, res.Y, res.Z);
        out["irreducible"] = irreducibility_certificate(gens);
    }
    write_output(opt, out.dump(2) + "\n");
    return 0;
}

template <class Fn>
int dispatch_backend(const Options& opt, Fn&& fn) {
    if (opt.backend == "symbolic") return fn(symbolic_context());
    if (opt.backend == "rational")
        return fn(numeric_context(usage_wrap([&] { return parse_rational_scalar(opt.q_value); })));
    throw UsageError("unknown backend '" + opt.backend + "' (expected symbolic or rational)");
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--d", opt.d_spec, "dimension parameter d, or a range A..B");
    cmd->add_option("--backend", opt.backend, "symbolic | rational");
    cmd->add_option("--q", opt.q_value, "rational value of q for the rational backend");
    cmd->add_option("--scalars", opt.scalars,
                    "free pairing scalars, e.g. xy*=2,yz*=3,zx*=5,yx*=7,zy*=1/2");
    cmd->add_option("--format", opt.format, "text (round-trippable) | table (aligned)");
    cmd->add_option("--out", opt.out_path, "write output to a file instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact models of the equitable presentation: canonical matrices, bases,\n"
        "transition matrices, rotators, verification suites, and recognition of\n"
        "bidiagonal triples."};
    app.require_subcommand(1);
    Options opt;

    auto* emit = app.add_subcommand("emit", "emit a canonical matrix, a representing matrix, or a basis");
    add_common(emit, opt);
    emit->add_option("--family", opt.family, "canonical family: K, Z, E, N, T or P");
    emit->add_flag("--transposed", opt.transposed, "apply the transpose modifier");
    emit->add_flag("--q-inverted", opt.q_inverted, "apply the q -> q^-1 modifier");
    emit->add_flag("--z-conjugated", opt.z_conjugated, "apply the Z-conjugation modifier");
    emit->add_option("--rep", opt.rep_spec, "representing matrix SPACE:BASIS:GENERATOR");
    emit->add_option("--basis", opt.basis_spec, "normalized basis SPACE:BASIS");
    emit->add_flag("--triple", opt.triple,
                   "the [x]row shape triple as a recognizer input document");

    auto* verify = app.add_subcommand("verify", "run verification suites over a range of d");
    add_common(verify, opt);
    verify->add_option("--suite", opt.suite,
                       "all | algebra | shape | flags | gram | transitions | rotator | "
                       "closedform | endo");

    auto* trans = app.add_subcommand("transition", "transition matrix between two bases");
    add_common(trans, opt);
    trans->add_option("--space", opt.space, "V or V*");
    trans->add_option("--from", opt.from, "source basis, e.g. [y]row")->required();
    trans->add_option("--to", opt.to, "target basis, e.g. [z]inv_row")->required();

    auto* gramc = app.add_subcommand("gram", "Gram matrix of a V basis against a V* basis");
    add_common(gramc, opt);
    gramc->add_option("--bv", opt.bv, "basis of V")->required();
    gramc->add_option("--bvdual", opt.bvdual, "basis of V*")->required();

    auto* recog = app.add_subcommand("recognize", "recognize a bidiagonal shape triple");
    add_common(recog, opt);
    recog->add_option("--in", opt.in_path, "triple document (JSON)")->required();
    recog->add_option("--q-hint", opt.q_hint, "value of q when b^-1 has no square root");
    recog->add_option("--b", opt.b_hint, "recurrence ratio hint for underdetermined inputs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(emit))
            return dispatch_backend(opt, [&](auto ctx) { return run_emit(opt, ctx); });
        if (app.got_subcommand(verify))
            return dispatch_backend(opt, [&](auto ctx) { return run_verify(opt, ctx); });
        if (app.got_subcommand(trans))
            return dispatch_backend(opt, [&](auto ctx) { return run_transition(opt, ctx); });
        if (app.got_subcommand(gramc))
            return dispatch_backend(opt, [&](auto ctx) { return run_gram(opt, ctx); });
        if (app.got_subcommand(recog)) {
            if (opt.backend == "rational") return run_recognize<Rational>(opt);
            if (opt.backend == "symbolic") return run_recognize<RingScalar>(opt);
            throw UsageError("unknown backend '" + opt.backend + "'");
        }
        throw UsageError("no command given");
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 5;
    } catch (const NeedsHintError& e) {
        std::cerr << "recognition error: " << e.what() << "\n";
        return 4;
    } catch (const NotAModuleError& e) {
        std::cerr << "recognition error: " << e.what() << "\n";
        return 4;
    } catch (const RecognitionError& e) {
        std::cerr << "recognition error: " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const ShapeError& e) {
        std::cerr << "shape error: " << e.what() << "\n";
        return 3;
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

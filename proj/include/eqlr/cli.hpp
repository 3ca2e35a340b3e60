#pragma once
//
// Input documents and the three commands of the command line tool. Each
// command returns a Report; rendering and exit codes live here too so the
// tool's main() stays a thin argument parser.
//
// Problem document (YAML):
//   f: "x1^3 + x2^3 + x3^3"
//   weights: [1, 1, 1]
//   degree: 3                          # optional, inferred from f
//   action: {order: 3, exponents: [1, 1, 2]}   # optional
//   galois: true                       # optional, default false
//   window: [-10, 10]                  # optional
//   bound: 6                           # optional presentation bound
//

#include "conn.hpp"
#include "equiv.hpp"
#include "poly_io.hpp"
#include "report.hpp"

#include <yaml-cpp/yaml.h>

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace eqlr::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kInstability = 2, kParse = 3 };

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kInvariantNote =
    "invariant dimensions are those of H^n(Der_k(A), A)^G; they are identified with H^n(Der_k(A^G), A^G) by the "
    "isomorphism for Galois invariant rings, which is asserted by the input (galois: true) and not recomputed from a "
    "presentation of A^G";

struct ProblemSpec {
    std::string f_text;
    Poly f;
    WeightSystem weights;
    std::optional<CyclicAction> action;
    bool galois = false;
    int window_lo = -10;
    int window_hi = 10;
    std::optional<int> bound;
    int max_n = 2;

    CyclicAction group() const { return action.value_or(CyclicAction::trivial()); }
};

namespace detail {

template <class T>
T scalar(const YAML::Node& n, const std::string& what) {
    try {
        return n.as<T>();
    } catch (const YAML::Exception&) {
        throw InputError(what + ": expected " + (std::is_same_v<T, bool> ? "a boolean" : std::is_integral_v<T> ? "an integer" : "a string"));
    }
}

inline std::vector<int> int_list(const YAML::Node& n, const std::string& what, std::size_t size) {
    if (!n.IsSequence() || n.size() != size)
        throw InputError(what + ": expected a list of " + std::to_string(size) + " integers");
    std::vector<int> out;
    for (const auto& x : n)
        out.push_back(scalar<int>(x, what));
    return out;
}

inline Poly poly_field(const std::string& text, const std::string& what) {
    try {
        return parse_poly(text);
    } catch (const ParseError& e) {
        throw InputError(what + ": " + e.what());
    }
}

inline YAML::Node load_yaml(const std::string& path) {
    try {
        return YAML::LoadFile(path);
    } catch (const YAML::BadFile&) {
        throw InputError(path + ": cannot open file");
    } catch (const YAML::Exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline std::vector<int> as_vector(const Monomial& m) { return {m[0], m[1], m[2]}; }

} // namespace detail

/// Reads a problem document. Throws InputError on malformed input only;
/// mathematical validity is checked by run_check.
inline ProblemSpec parse_problem(const YAML::Node& doc) {
    if (!doc.IsMap())
        throw InputError("problem document must be a mapping");
    for (const auto& kv : doc) {
        auto key = kv.first.as<std::string>();
        static const std::set<std::string> known{"f", "weights", "degree", "action", "galois", "window", "bound", "variables"};
        if (!known.count(key))
            throw InputError("unknown key '" + key + "'");
    }
    ProblemSpec s;
    if (!doc["f"])
        throw InputError("missing key 'f'");
    s.f_text = detail::scalar<std::string>(doc["f"], "f");
    s.f = detail::poly_field(s.f_text, "f");
    if (!doc["weights"])
        throw InputError("missing key 'weights'");
    auto w = detail::int_list(doc["weights"], "weights", 3);
    s.weights.var_weights = {w[0], w[1], w[2]};
    if (doc["variables"]) {
        const auto& v = doc["variables"];
        if (!v.IsSequence() || v.size() != 3 || v[0].as<std::string>() != "x1" || v[1].as<std::string>() != "x2" ||
            v[2].as<std::string>() != "x3")
            throw InputError("variables: only [x1, x2, x3] is supported");
    }
    if (doc["degree"]) {
        s.weights.degree = detail::scalar<int>(doc["degree"], "degree");
    } else {
        if (s.f.is_zero())
            throw InputError("degree: cannot infer the degree of f = 0");
        s.weights.degree = weighted_degree(s.f.lex_leading(), s.weights);
    }
    if (doc["action"]) {
        const auto& a = doc["action"];
        if (!a.IsMap() || !a["order"] || !a["exponents"])
            throw InputError("action: expected {order: m, exponents: [m1, m2, m3]}");
        int m = detail::scalar<int>(a["order"], "action.order");
        auto e = detail::int_list(a["exponents"], "action.exponents", 3);
        if (m < 1)
            throw InputError("action.order: must be at least 1");
        s.action = CyclicAction::make(m, {e[0], e[1], e[2]});
    }
    if (doc["galois"])
        s.galois = detail::scalar<bool>(doc["galois"], "galois");
    if (doc["window"]) {
        auto win = detail::int_list(doc["window"], "window", 2);
        s.window_lo = win[0];
        s.window_hi = win[1];
        if (s.window_lo > s.window_hi)
            throw InputError("window: lower end exceeds upper end");
    }
    if (doc["bound"]) {
        s.bound = detail::scalar<int>(doc["bound"], "bound");
        if (*s.bound < 0)
            throw InputError("bound: must be non-negative");
    }
    return s;
}

inline ProblemSpec load_problem(const std::string& path) { return parse_problem(detail::load_yaml(path)); }

inline ProblemSpec parse_problem_text(const std::string& text) {
    try {
        return parse_problem(YAML::Load(text));
    } catch (const YAML::Exception& e) {
        throw InputError(e.what());
    }
}

// --- module and connection documents ---
//
// module:     generators: ["x1 + x2", "x3"]
//             syzygy_bound: 12          # optional
// connection: gamma:                    # Gamma^(i)_{lj} for l = 0..r-1
//               - {der: 0, module: 0, values: ["0", "0"]}
//             compare: [...]            # optional second connection
//             solve: true | invariant   # instead of gamma: find one

struct ModuleSpec {
    std::vector<std::string> generator_text;
    std::vector<Poly> generators;
    std::optional<int> syzygy_bound;
};

inline ModuleSpec parse_module(const YAML::Node& doc) {
    if (!doc.IsMap() || !doc["generators"] || !doc["generators"].IsSequence())
        throw InputError("module document needs a 'generators' list");
    ModuleSpec m;
    for (const auto& g : doc["generators"]) {
        m.generator_text.push_back(detail::scalar<std::string>(g, "generators"));
        m.generators.push_back(detail::poly_field(m.generator_text.back(), "module generator"));
    }
    if (doc["syzygy_bound"])
        m.syzygy_bound = detail::scalar<int>(doc["syzygy_bound"], "syzygy_bound");
    return m;
}

inline ModuleSpec load_module(const std::string& path) { return parse_module(detail::load_yaml(path)); }

struct GammaEntry {
    int der = 0;
    int module = 0;
    std::vector<Poly> values;
};

struct ConnectionSpec {
    enum class Solve { None, Any, Invariant };
    Solve solve = Solve::None;
    std::vector<GammaEntry> gamma;
    std::optional<std::vector<GammaEntry>> compare;
};

inline std::vector<GammaEntry> parse_gamma(const YAML::Node& n, const std::string& what) {
    if (!n.IsSequence())
        throw InputError(what + ": expected a list of {der, module, values}");
    std::vector<GammaEntry> out;
    for (const auto& e : n) {
        if (!e.IsMap() || !e["der"] || !e["module"] || !e["values"] || !e["values"].IsSequence())
            throw InputError(what + ": each entry needs der, module and values");
        GammaEntry g{detail::scalar<int>(e["der"], what + ".der"), detail::scalar<int>(e["module"], what + ".module"), {}};
        for (const auto& v : e["values"])
            g.values.push_back(detail::poly_field(detail::scalar<std::string>(v, what + ".values"), what + ".values"));
        out.push_back(std::move(g));
    }
    return out;
}

inline ConnectionSpec parse_connection(const YAML::Node& doc) {
    if (!doc.IsMap())
        throw InputError("connection document must be a mapping");
    ConnectionSpec c;
    if (doc["solve"]) {
        auto v = detail::scalar<std::string>(doc["solve"], "solve");
        if (v == "true" || v == "any")
            c.solve = ConnectionSpec::Solve::Any;
        else if (v == "invariant")
            c.solve = ConnectionSpec::Solve::Invariant;
        else if (v != "false")
            throw InputError("solve: expected true, any or invariant");
    }
    if (doc["gamma"])
        c.gamma = parse_gamma(doc["gamma"], "gamma");
    else if (c.solve == ConnectionSpec::Solve::None)
        throw InputError("connection document needs 'gamma' or 'solve'");
    if (doc["compare"])
        c.compare = parse_gamma(doc["compare"], "compare");
    return c;
}

inline ConnectionSpec load_connection(const std::string& path) { return parse_connection(detail::load_yaml(path)); }

/// Builds Gamma from entries; unlisted entries are zero.
inline Connection build_connection(const std::vector<GammaEntry>& entries, std::size_t der_rank, std::size_t rank) {
    Connection c = Connection::zero(der_rank, rank);
    for (const auto& e : entries) {
        if (e.der < 0 || static_cast<std::size_t>(e.der) >= der_rank)
            throw ValidationError("connection entry refers to Der generator " + std::to_string(e.der) + "; there are " +
                                  std::to_string(der_rank));
        if (e.module < 0 || static_cast<std::size_t>(e.module) >= rank)
            throw ValidationError("connection entry refers to module generator " + std::to_string(e.module) +
                                  "; there are " + std::to_string(rank));
        if (e.values.size() != rank)
            throw ValidationError("connection entry (" + std::to_string(e.der) + ", " + std::to_string(e.module) +
                                  ") must list " + std::to_string(rank) + " values");
        for (std::size_t l = 0; l < rank; ++l)
            c.gamma[e.der][l][e.module] = e.values[l];
    }
    return c;
}

// --- commands ---

struct CohomologyOptions {
    std::optional<int> max_n;
    std::optional<std::pair<int, int>> window;
    bool invariants = false;
    std::optional<int> bound;
};

inline int presentation_bound(const ProblemSpec& s, const WeightedAlgebra& alg, std::optional<int> override_bound) {
    if (override_bound)
        return *override_bound;
    return s.bound.value_or(default_presentation_bound(alg));
}

inline report::InputEcho echo(const ProblemSpec& s, int bound, int lo, int hi, int max_n) {
    report::InputEcho in;
    in.f = s.f_text;
    in.weights = {s.weights.var_weights[0], s.weights.var_weights[1], s.weights.var_weights[2]};
    in.degree = s.weights.degree;
    if (s.action)
        in.action = report::ActionEcho{s.action->order, {s.action->exponents[0], s.action->exponents[1], s.action->exponents[2]}};
    in.galois = s.galois;
    in.window_lo = lo;
    in.window_hi = hi;
    in.bound = bound;
    in.max_n = max_n;
    return in;
}

inline report::Quantities quantities(const ProblemSpec& s) {
    report::Quantities q;
    int shift = s.weights.degree;
    for (int w : s.weights.var_weights)
        shift -= w;
    q.canonical_shift = shift;
    if (s.action) {
        q.canonical_character = s.action->canonical_character();
        q.canonical_character_residue = s.action->residue(*q.canonical_character);
    }
    return q;
}

/// Homogeneity, action compatibility, pseudo-reflections and the Galois echo.
inline report::Report run_check(const ProblemSpec& s) {
    report::Report r;
    r.command = "check";
    r.input = echo(s, s.bound.value_or(2 * s.weights.degree), s.window_lo, s.window_hi, s.max_n);
    r.quantities = quantities(s);
    report::CheckSection c;
    c.galois = s.galois;
    for (int w : s.weights.var_weights)
        if (w < 1) {
            r.errors.push_back("variable weights must be positive");
            c.homogeneous = false;
        }
    if (s.weights.degree < 1) {
        r.errors.push_back("total weight must be positive");
        c.homogeneous = false;
    }
    if (s.f.is_zero()) {
        r.errors.push_back("f must be nonzero");
        c.homogeneous = false;
    }
    if (c.homogeneous) {
        for (const auto& m : homogeneity_defects(s.f, s.weights))
            c.offending.push_back(detail::as_vector(m));
        if (!c.offending.empty()) {
            c.homogeneous = false;
            std::ostringstream os;
            os << "f is not weighted homogeneous of degree " << s.weights.degree << "; offending exponents:";
            for (const auto& m : c.offending)
                os << " (" << m[0] << "," << m[1] << "," << m[2] << ")";
            r.errors.push_back(os.str());
        }
    }
    if (s.action) {
        report::ActionSection a;
        for (const auto& [m, q] : s.f.terms()) {
            long v = 0;
            for (std::size_t i = 0; i < kNumVars; ++i)
                v += static_cast<long>(m[i]) * s.action->exponents[i];
            a.support_values.push_back(v);
            if (s.action->residue(v) != 0)
                a.offending.push_back(detail::as_vector(m));
            if (v != s.action->order)
                a.strict_equality = false;
        }
        a.compatible = a.offending.empty();
        if (!a.compatible) {
            std::ostringstream os;
            os << "action of type (" << s.action->order << ";" << s.action->exponents[0] << "," << s.action->exponents[1]
               << "," << s.action->exponents[2] << ") does not preserve f; offending exponents:";
            for (const auto& m : a.offending)
                os << " (" << m[0] << "," << m[1] << "," << m[2] << ")";
            r.errors.push_back(os.str());
        } else if (!a.strict_equality && !s.action->is_trivial()) {
            r.warnings.push_back("action is compatible only modulo m: sum alpha_i m_i = m fails for some support "
                                 "monomial of f");
        }
        c.action = a;
        auto pr = pseudo_reflection_check(*s.action);
        report::PseudoReflectionSection p;
        p.dimension = static_cast<int>(pr.dimension);
        p.has_pseudo_reflections = pr.has_pseudo_reflections;
        for (const auto& e : pr.elements)
            p.elements.push_back({e.power, static_cast<int>(e.fixed_dimension), e.pseudo_reflection});
        c.pseudo_reflections = p;
        if (pr.has_pseudo_reflections)
            r.warnings.push_back("the action on k^3 contains pseudo-reflections");
        if (!s.galois)
            r.warnings.push_back("galois is not asserted: invariant cohomology will be refused");
        r.notes.push_back(kInvariantNote);
    } else {
        r.notes.push_back("no action given: equivariant features are disabled");
    }
    r.notes.push_back("irreducibility of f is not checked; A is assumed to be an integral domain");
    r.check = c;
    r.ok = r.errors.empty();
    r.exit_code = r.ok ? kOk : kValidation;
    return r;
}

inline WeightedAlgebra make_algebra(const ProblemSpec& s) { return WeightedAlgebra(s.f, s.weights); }

inline report::PresentationSection presentation_section(const DerPresentation& p) {
    report::PresentationSection out;
    out.bound = p.bound;
    for (const auto& g : p.generators) {
        report::GeneratorEntry e{g.degree, g.weight, {}};
        for (const auto& a : g.derivation.coeffs)
            e.coefficients.push_back(to_string(a));
        out.generators.push_back(std::move(e));
    }
    for (const auto& rel : p.relations) {
        report::RelationEntry e{rel.degree, rel.weight, {}};
        for (const auto& a : rel.coeffs)
            e.coefficients.push_back(to_string(a));
        out.relations.push_back(std::move(e));
    }
    return out;
}

namespace detail {

inline std::vector<report::CohomologyEntry> sweep(const LieRinehartComplex& cx, int max_n, int lo, int hi, bool blocks,
                                                  bool invariants) {
    std::vector<report::CohomologyEntry> out;
    for (int n = 0; n <= max_n; ++n)
        for (int e = lo; e <= hi; ++e) {
            auto h = cx.cohomology(n, e);
            report::CohomologyEntry entry{n, e, static_cast<int>(h.dimension), static_cast<int>(h.cochain_dimension), {}, {}};
            if (blocks)
                for (int t = 0; t < cx.action().order; ++t)
                    entry.blocks.push_back(static_cast<int>(cx.cohomology(n, e, t).dimension));
            if (invariants)
                entry.invariant = blocks ? entry.blocks.front() : entry.dimension;
            out.push_back(std::move(entry));
        }
    return out;
}

} // namespace detail

/// Report skeleton for commands needing a valid algebra; nullopt means the
/// check failed and `r` holds the diagnostics.
inline std::optional<WeightedAlgebra> prepare(const ProblemSpec& s, report::Report& r) {
    report::Report chk = run_check(s);
    r.quantities = chk.quantities;
    r.warnings = chk.warnings;
    r.notes = chk.notes;
    if (!chk.ok) {
        r.check = chk.check;
        r.errors = chk.errors;
        r.ok = false;
        r.exit_code = kValidation;
        return std::nullopt;
    }
    return make_algebra(s);
}

inline report::Report run_cohomology(const ProblemSpec& s, const CohomologyOptions& opt = {}) {
    report::Report r;
    r.command = "cohomology";
    const int max_n = opt.max_n.value_or(s.max_n);
    const int lo = opt.window ? opt.window->first : s.window_lo;
    const int hi = opt.window ? opt.window->second : s.window_hi;
    r.input = echo(s, s.bound.value_or(2 * s.weights.degree), lo, hi, max_n);
    auto alg = prepare(s, r);
    if (!alg)
        return r;
    if (max_n < 0 || lo > hi) {
        r.errors.push_back("invalid --max-n or --window");
        r.ok = false;
        r.exit_code = kValidation;
        return r;
    }
    const bool equivariant = s.action && !s.action->is_trivial();
    if (opt.invariants && equivariant && !s.galois) {
        r.errors.push_back(GaloisNotAssertedError().what());
        r.ok = false;
        r.exit_code = kValidation;
        return r;
    }
    const int bound = presentation_bound(s, *alg, opt.bound);
    r.input.bound = bound;
    LieRinehartComplex cx(*alg, s.group(), bound);
    r.presentation = presentation_section(cx.presentation());
    r.cohomology = detail::sweep(cx, max_n, lo, hi, equivariant, opt.invariants);

    // instability signal: rerun with a larger presentation bound
    LieRinehartComplex check(*alg, s.group(), bound + 2);
    report::StabilitySection st{bound, bound + 2, true, {}};
    auto again = detail::sweep(check, max_n, lo, hi, false, false);
    for (std::size_t i = 0; i < again.size(); ++i)
        if (again[i].dimension != r.cohomology[i].dimension) {
            st.stable = false;
            st.discrepancies.push_back({again[i].n, again[i].degree, r.cohomology[i].dimension, again[i].dimension});
        }
    r.stability = st;
    if (!st.stable) {
        r.warnings.push_back("cohomology dimensions change between presentation bounds " + std::to_string(bound) +
                             " and " + std::to_string(bound + 2) + "; raise the bound");
        r.ok = false;
        r.exit_code = kInstability;
    }
    if (!report::consistent(r))
        throw std::logic_error("report blocks do not sum to totals");
    return r;
}

namespace detail {

inline report::ClassSection class_section(const CohomologyClassReport& c) {
    report::ClassSection out;
    out.zero = c.zero;
    for (const auto& comp : c.components) {
        report::ClassComponentEntry e{comp.degree, comp.weight, static_cast<int>(comp.cohomology_dimension), {}};
        for (const auto& q : comp.coordinates)
            e.coordinates.push_back(q.to_string());
        out.components.push_back(std::move(e));
    }
    return out;
}

inline report::ConnectionAnalysis analyse(const RankOneModule& M, const Connection& c, const LieRinehartComplex& cx,
                                          bool by_weight) {
    report::ConnectionAnalysis a;
    auto v = verify_connection(M, c, cx);
    a.valid = v.ok;
    for (const auto& x : v.violations) {
        static const char* kinds[] = {"module-relation", "der-relation", "shape"};
        a.violations.push_back({kinds[static_cast<int>(x.kind)], static_cast<int>(x.relation),
                                static_cast<int>(x.generator), to_string(x.residual), describe(x)});
    }
    if (!a.valid)
        return a;
    auto ic = integrability_class(M, c, cx, by_weight);
    for (const auto& val : ic.curvature.values)
        a.curvature.push_back(to_string(val));
    a.integrable = ic.integrable;
    a.integrability_class = class_section(ic.cls);
    return a;
}

} // namespace detail

inline report::Report run_connection(const ProblemSpec& s, const ModuleSpec& ms, const ConnectionSpec& cs,
                                     bool equivariant) {
    report::Report r;
    r.command = "connection";
    r.input = echo(s, s.bound.value_or(2 * s.weights.degree), s.window_lo, s.window_hi, s.max_n);
    auto alg = prepare(s, r);
    if (!alg)
        return r;
    auto fail = [&r](const std::string& msg) {
        r.errors.push_back(msg);
        r.ok = false;
        r.exit_code = kValidation;
        return r;
    };
    if (equivariant && !s.action)
        return fail("--equivariant needs an action in the problem document");
    if (equivariant && !s.galois)
        return fail(GaloisNotAssertedError().what());
    const int bound = presentation_bound(s, *alg, std::nullopt);
    r.input.bound = bound;
    LieRinehartComplex cx(*alg, s.group(), bound);
    r.presentation = presentation_section(cx.presentation());

    RankOneModule M;
    try {
        M = make_module(ms.generators, *alg, equivariant ? s.action : std::nullopt, ms.syzygy_bound);
    } catch (const ValidationError& e) {
        return fail(std::string("module: ") + e.what());
    }
    report::ConnectionSection out;
    out.equivariant = equivariant;
    for (const auto& g : M.generators)
        out.module.generators.push_back(to_string(g));
    out.module.degrees = M.degrees;
    out.module.weights = M.weights;
    out.module.syzygies = static_cast<int>(M.syzygies.size());

    Connection given;
    try {
        if (cs.solve != ConnectionSpec::Solve::None) {
            auto found = solve_connection(M, cx, cs.solve == ConnectionSpec::Solve::Invariant);
            if (!found)
                return fail("no homogeneous connection of degree 0 exists on this module");
            given = *found;
        } else {
            given = build_connection(cs.gamma, cx.generators().size(), M.size());
        }
    } catch (const ValidationError& e) {
        return fail(std::string("connection: ") + e.what());
    }

    for (std::size_t i = 0; i < given.gamma.size(); ++i)
        for (std::size_t j = 0; j < M.size(); ++j) {
            report::GammaEcho g{static_cast<int>(i), static_cast<int>(j), {}};
            bool nonzero = false;
            for (std::size_t l = 0; l < M.size(); ++l) {
                g.values.push_back(to_string(given.gamma[i][l][j]));
                nonzero = nonzero || !given.gamma[i][l][j].is_zero();
            }
            if (nonzero)
                out.gamma.push_back(std::move(g));
        }
    try {
        out.given = detail::analyse(M, given, cx, equivariant);
        if (!out.given.valid) {
            r.connection = out;
            for (const auto& v : out.given.violations)
                r.errors.push_back(v.message);
            r.ok = false;
            r.exit_code = kValidation;
            return r;
        }
        const int lo = s.window_lo, hi = s.window_hi;
        int moduli = 0;
        for (int e = lo; e <= hi; ++e)
            moduli += static_cast<int>(equivariant ? cx.cohomology(1, e, 0).dimension : cx.cohomology(1, e).dimension);
        out.moduli.dimension = moduli;
        out.moduli.unique = moduli == 0;

        bool exists = out.given.integrability_class->zero;
        if (equivariant) {
            out.given_invariant = is_invariant(M, given, cx);
            Connection avg = average_connection(M, given, cx);
            out.averaged = detail::analyse(M, avg, cx, true);
            // the class of the averaged connection lives in the invariant block
            exists = out.averaged->integrability_class->zero;
        }
        if (cs.compare) {
            Connection other = build_connection(*cs.compare, cx.generators().size(), M.size());
            auto a1 = out.given;
            auto a2 = detail::analyse(M, other, cx, equivariant);
            if (!a2.valid)
                return fail("compared connection is not a connection: " + a2.violations.front().message);
            if (!a1.integrable || !a2.integrable) {
                r.warnings.push_back("moduli comparison skipped: both connections must be integrable");
            } else {
                auto mc = moduli_class(M, given, other, cx, equivariant);
                out.moduli.equivalent = mc.equivalent;
                out.moduli.difference_class = detail::class_section(mc.cls);
            }
        }
        std::string where = equivariant ? "on the quotient" : "on M";
        if (exists)
            out.conclusion = "integrable connection " + where + " exists, " +
                             (out.moduli.unique ? std::string("unique class")
                                                : "moduli of dimension " + std::to_string(moduli) + " in the window");
        else
            out.conclusion = "no integrable connection " + where + ": the integrability class is nonzero";
    } catch (const ConnectionError& e) {
        return fail(e.what());
    } catch (const NotInSpanError& e) {
        r.errors.push_back(std::string(e.what()) + "; raise the presentation bound");
        r.ok = false;
        r.exit_code = kInstability;
        return r;
    }
    r.connection = out;
    return r;
}

inline report::Report run_presentation(const ProblemSpec& s) {
    report::Report r;
    r.command = "presentation";
    r.input = echo(s, s.bound.value_or(2 * s.weights.degree), s.window_lo, s.window_hi, s.max_n);
    auto alg = prepare(s, r);
    if (!alg)
        return r;
    r.input.bound = presentation_bound(s, *alg, std::nullopt);
    r.presentation = presentation_section(build_presentation(*alg, s.group(), r.input.bound));
    return r;
}

// --- text rendering ---

namespace detail {

inline std::string table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c)
                width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
        os << "\n";
    }
    return os.str();
}

inline std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

inline std::string yes(bool b) { return b ? "yes" : "no"; }

inline void render_class(std::ostringstream& os, const std::string& label, const report::ClassSection& c) {
    os << label << ": " << (c.zero ? "zero" : "nonzero") << "\n";
    for (const auto& comp : c.components) {
        os << "  degree " << comp.degree;
        if (comp.weight)
            os << " weight " << *comp.weight;
        os << " (dim " << comp.dimension << "): [";
        for (std::size_t i = 0; i < comp.coordinates.size(); ++i)
            os << (i ? ", " : "") << comp.coordinates[i];
        os << "]\n";
    }
}

inline void render_analysis(std::ostringstream& os, const std::string& label, const report::ConnectionAnalysis& a) {
    os << label << ": " << (a.valid ? "valid connection" : "NOT a connection") << "\n";
    for (const auto& v : a.violations)
        os << "  violation: " << v.message << "\n";
    if (!a.valid)
        return;
    os << "  curvature:";
    for (const auto& c : a.curvature)
        os << " [" << c << "]";
    os << "\n  integrable: " << yes(a.integrable) << "\n";
    if (a.integrability_class)
        render_class(os, "  integrability class", *a.integrability_class);
}

} // namespace detail

inline std::string render_text(const report::Report& r) {
    std::ostringstream os;
    const auto& in = r.input;
    os << "f = " << in.f << ", weights (" << in.degree << "; " << detail::join(in.weights) << ")";
    if (in.action)
        os << ", action (" << in.action->order << "; " << detail::join(in.action->exponents) << ")";
    os << "\n";
    os << "d - d1 - d2 - d3 = " << r.quantities.canonical_shift;
    if (r.quantities.canonical_character)
        os << ", m1 + m2 + m3 - m = " << *r.quantities.canonical_character << " (residue "
           << *r.quantities.canonical_character_residue << ")";
    os << "\n";
    if (r.check) {
        const auto& c = *r.check;
        os << "homogeneous: " << detail::yes(c.homogeneous) << "\n";
        if (c.action)
            os << "action compatible: " << detail::yes(c.action->compatible)
               << ", strict equality: " << detail::yes(c.action->strict_equality) << "\n";
        if (c.pseudo_reflections) {
            std::vector<std::vector<std::string>> rows{{"g^k", "fixed dim", "pseudo-reflection"}};
            for (const auto& e : c.pseudo_reflections->elements)
                rows.push_back({std::to_string(e.power), std::to_string(e.fixed_dimension), detail::yes(e.pseudo_reflection)});
            os << detail::table(rows);
        }
        os << "galois asserted: " << detail::yes(c.galois) << "\n";
    }
    if (r.presentation && r.command == "presentation") {
        os << "Der generators (bound " << r.presentation->bound << "):\n";
        std::vector<std::vector<std::string>> rows{{"#", "degree", "weight", "d/dx1", "d/dx2", "d/dx3"}};
        for (std::size_t i = 0; i < r.presentation->generators.size(); ++i) {
            const auto& g = r.presentation->generators[i];
            rows.push_back({std::to_string(i), std::to_string(g.degree), std::to_string(g.weight), g.coefficients[0],
                            g.coefficients[1], g.coefficients[2]});
        }
        os << detail::table(rows);
        os << r.presentation->relations.size() << " relations\n";
    } else if (r.presentation) {
        os << "presentation: " << r.presentation->generators.size() << " generators, "
           << r.presentation->relations.size() << " relations, bound " << r.presentation->bound << "\n";
    }
    if (!r.cohomology.empty()) {
        std::vector<std::vector<std::string>> rows{{"n", "degree", "dim H", "dim C"}};
        const bool blocks = !r.cohomology.front().blocks.empty();
        const bool inv = r.cohomology.front().invariant.has_value();
        if (blocks)
            rows.front().push_back("by weight");
        if (inv)
            rows.front().push_back("invariant");
        for (const auto& c : r.cohomology) {
            std::vector<std::string> row{std::to_string(c.n), std::to_string(c.degree), std::to_string(c.dimension),
                                         std::to_string(c.cochain_dimension)};
            if (blocks)
                row.push_back(detail::join(c.blocks));
            if (inv)
                row.push_back(std::to_string(*c.invariant));
            rows.push_back(std::move(row));
        }
        os << detail::table(rows);
    }
    if (r.stability)
        os << "stable under bounds " << r.stability->bound << " and " << r.stability->check_bound << ": "
           << detail::yes(r.stability->stable) << "\n";
    if (r.connection) {
        const auto& c = *r.connection;
        os << "module generators: ";
        for (std::size_t i = 0; i < c.module.generators.size(); ++i)
            os << (i ? ", " : "") << c.module.generators[i];
        os << " (" << c.module.syzygies << " syzygies)\n";
        detail::render_analysis(os, "given", c.given);
        if (c.given_invariant)
            os << "given connection invariant: " << detail::yes(*c.given_invariant) << "\n";
        if (c.averaged)
            detail::render_analysis(os, "averaged", *c.averaged);
        os << "moduli dimension: " << c.moduli.dimension << "\n";
        if (c.moduli.equivalent)
            os << "compared connections equivalent: " << detail::yes(*c.moduli.equivalent) << "\n";
        if (!c.conclusion.empty())
            os << "conclusion: " << c.conclusion << "\n";
    }
    for (const auto& w : r.warnings)
        os << "warning: " << w << "\n";
    for (const auto& e : r.errors)
        os << "error: " << e << "\n";
    for (const auto& n : r.notes)
        os << "note: " << n << "\n";
    return os.str();
}

} // namespace eqlr::cli

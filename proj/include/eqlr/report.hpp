#pragma once
//
// Report data emitted by the command line tool, with JSON conversion.
// The JSON layout is documented in docs/report-schema.md; every field below
// appears there under the same name.
//

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace eqlr::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "eqlr-report/1";

struct ActionEcho {
    int order = 1;
    std::vector<int> exponents;
    bool operator==(const ActionEcho&) const = default;
};

struct InputEcho {
    std::string f;
    std::vector<int> weights;
    int degree = 0;
    std::optional<ActionEcho> action;
    bool galois = false;
    int window_lo = 0;
    int window_hi = 0;
    int bound = 0;
    int max_n = 2;
    bool operator==(const InputEcho&) const = default;
};

struct Quantities {
    int canonical_shift = 0;                      // d - d1 - d2 - d3
    std::optional<int> canonical_character;       // m1 + m2 + m3 - m
    std::optional<int> canonical_character_residue;
    bool operator==(const Quantities&) const = default;
};

struct ActionSection {
    bool compatible = true;
    bool strict_equality = true;
    std::vector<std::vector<int>> offending;
    std::vector<long> support_values;
    bool operator==(const ActionSection&) const = default;
};

struct PseudoReflectionEntry {
    int power = 0;
    int fixed_dimension = 0;
    bool pseudo_reflection = false;
    bool operator==(const PseudoReflectionEntry&) const = default;
};

struct PseudoReflectionSection {
    int dimension = 0;
    bool has_pseudo_reflections = false;
    std::vector<PseudoReflectionEntry> elements;
    bool operator==(const PseudoReflectionSection&) const = default;
};

struct CheckSection {
    bool homogeneous = true;
    std::vector<std::vector<int>> offending;
    std::optional<ActionSection> action;
    std::optional<PseudoReflectionSection> pseudo_reflections;
    bool galois = false;
    bool operator==(const CheckSection&) const = default;
};

struct GeneratorEntry {
    int degree = 0;
    int weight = 0;
    std::vector<std::string> coefficients;
    bool operator==(const GeneratorEntry&) const = default;
};

struct RelationEntry {
    int degree = 0;
    int weight = 0;
    std::vector<std::string> coefficients;
    bool operator==(const RelationEntry&) const = default;
};

struct PresentationSection {
    int bound = 0;
    std::vector<GeneratorEntry> generators;
    std::vector<RelationEntry> relations;
    bool operator==(const PresentationSection&) const = default;
};

struct CohomologyEntry {
    int n = 0;
    int degree = 0;
    int dimension = 0;
    int cochain_dimension = 0;
    std::vector<int> blocks; // by xi-weight 0..m-1; empty without an action
    std::optional<int> invariant;
    bool operator==(const CohomologyEntry&) const = default;
};

struct Discrepancy {
    int n = 0;
    int degree = 0;
    int dimension = 0;
    int dimension_check = 0;
    bool operator==(const Discrepancy&) const = default;
};

struct StabilitySection {
    int bound = 0;
    int check_bound = 0;
    bool stable = true;
    std::vector<Discrepancy> discrepancies;
    bool operator==(const StabilitySection&) const = default;
};

struct ModuleEcho {
    std::vector<std::string> generators;
    std::vector<int> degrees;
    std::optional<std::vector<int>> weights;
    int syzygies = 0;
    bool operator==(const ModuleEcho&) const = default;
};

struct Violation {
    std::string kind; // "module-relation", "der-relation" or "shape"
    int relation = 0;
    int generator = 0;
    std::string residual;
    std::string message;
    bool operator==(const Violation&) const = default;
};

struct ClassComponentEntry {
    int degree = 0;
    std::optional<int> weight;
    int dimension = 0;
    std::vector<std::string> coordinates;
    bool operator==(const ClassComponentEntry&) const = default;
};

struct ClassSection {
    bool zero = true;
    std::vector<ClassComponentEntry> components;
    bool operator==(const ClassSection&) const = default;
};

struct ConnectionAnalysis {
    bool valid = true;
    std::vector<Violation> violations;
    std::vector<std::string> curvature; // one value per 2-wedge generator
    bool integrable = false;
    std::optional<ClassSection> integrability_class;
    bool operator==(const ConnectionAnalysis&) const = default;
};

struct ModuliSection {
    /// sum over the window of dim H^1 (weight-0 block in equivariant mode)
    int dimension = 0;
    bool unique = false;
    std::optional<bool> equivalent;     // set when a second connection was compared
    std::optional<ClassSection> difference_class;
    bool operator==(const ModuliSection&) const = default;
};

struct GammaEcho {
    int der = 0;
    int module = 0;
    std::vector<std::string> values; // Gamma^(der)_{l, module} for each l
    bool operator==(const GammaEcho&) const = default;
};

struct ConnectionSection {
    ModuleEcho module;
    bool equivariant = false;
    std::vector<GammaEcho> gamma; // nonzero entries of the analysed connection
    ConnectionAnalysis given;
    std::optional<ConnectionAnalysis> averaged;
    std::optional<bool> given_invariant;
    ModuliSection moduli;
    std::string conclusion;
    bool operator==(const ConnectionSection&) const = default;
};

struct Report {
    std::string schema = kSchema;
    std::string command;
    bool ok = true;
    int exit_code = 0;
    InputEcho input;
    Quantities quantities;
    std::optional<CheckSection> check;
    std::optional<PresentationSection> presentation;
    std::vector<CohomologyEntry> cohomology;
    std::optional<StabilitySection> stability;
    std::optional<ConnectionSection> connection;
    std::vector<std::string> warnings;
    std::vector<std::string> notes;
    std::vector<std::string> errors;
    bool operator==(const Report&) const = default;
};

// --- JSON ---

namespace detail {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
    if (v)
        j[key] = *v;
    else
        j[key] = nullptr;
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null())
        v.reset();
    else
        v = it->template get<T>();
}

} // namespace detail

inline void to_json(json& j, const ActionEcho& a) { j = json{{"order", a.order}, {"exponents", a.exponents}}; }
inline void from_json(const json& j, ActionEcho& a) {
    j.at("order").get_to(a.order);
    j.at("exponents").get_to(a.exponents);
}

inline void to_json(json& j, const InputEcho& in) {
    j = json{{"f", in.f}, {"weights", in.weights}, {"degree", in.degree}};
    detail::put_optional(j, "action", in.action);
    j["galois"] = in.galois;
    j["window"] = {in.window_lo, in.window_hi};
    j["bound"] = in.bound;
    j["max_n"] = in.max_n;
}
inline void from_json(const json& j, InputEcho& in) {
    j.at("f").get_to(in.f);
    j.at("weights").get_to(in.weights);
    j.at("degree").get_to(in.degree);
    detail::get_optional(j, "action", in.action);
    j.at("galois").get_to(in.galois);
    in.window_lo = j.at("window").at(0).get<int>();
    in.window_hi = j.at("window").at(1).get<int>();
    j.at("bound").get_to(in.bound);
    j.at("max_n").get_to(in.max_n);
}

inline void to_json(json& j, const Quantities& q) {
    j = json{{"canonical_shift", q.canonical_shift}};
    detail::put_optional(j, "canonical_character", q.canonical_character);
    detail::put_optional(j, "canonical_character_residue", q.canonical_character_residue);
}
inline void from_json(const json& j, Quantities& q) {
    j.at("canonical_shift").get_to(q.canonical_shift);
    detail::get_optional(j, "canonical_character", q.canonical_character);
    detail::get_optional(j, "canonical_character_residue", q.canonical_character_residue);
}

inline void to_json(json& j, const ActionSection& a) {
    j = json{{"compatible", a.compatible},
             {"strict_equality", a.strict_equality},
             {"offending", a.offending},
             {"support_values", a.support_values}};
}
inline void from_json(const json& j, ActionSection& a) {
    j.at("compatible").get_to(a.compatible);
    j.at("strict_equality").get_to(a.strict_equality);
    j.at("offending").get_to(a.offending);
    j.at("support_values").get_to(a.support_values);
}

inline void to_json(json& j, const PseudoReflectionEntry& e) {
    j = json{{"power", e.power}, {"fixed_dimension", e.fixed_dimension}, {"pseudo_reflection", e.pseudo_reflection}};
}
inline void from_json(const json& j, PseudoReflectionEntry& e) {
    j.at("power").get_to(e.power);
    j.at("fixed_dimension").get_to(e.fixed_dimension);
    j.at("pseudo_reflection").get_to(e.pseudo_reflection);
}

inline void to_json(json& j, const PseudoReflectionSection& p) {
    j = json{{"dimension", p.dimension}, {"has_pseudo_reflections", p.has_pseudo_reflections}, {"elements", p.elements}};
}
inline void from_json(const json& j, PseudoReflectionSection& p) {
    j.at("dimension").get_to(p.dimension);
    j.at("has_pseudo_reflections").get_to(p.has_pseudo_reflections);
    j.at("elements").get_to(p.elements);
}

inline void to_json(json& j, const CheckSection& c) {
    j = json{{"homogeneous", c.homogeneous}, {"offending", c.offending}};
    detail::put_optional(j, "action", c.action);
    detail::put_optional(j, "pseudo_reflections", c.pseudo_reflections);
    j["galois"] = c.galois;
}
inline void from_json(const json& j, CheckSection& c) {
    j.at("homogeneous").get_to(c.homogeneous);
    j.at("offending").get_to(c.offending);
    detail::get_optional(j, "action", c.action);
    detail::get_optional(j, "pseudo_reflections", c.pseudo_reflections);
    j.at("galois").get_to(c.galois);
}

inline void to_json(json& j, const GeneratorEntry& g) {
    j = json{{"degree", g.degree}, {"weight", g.weight}, {"coefficients", g.coefficients}};
}
inline void from_json(const json& j, GeneratorEntry& g) {
    j.at("degree").get_to(g.degree);
    j.at("weight").get_to(g.weight);
    j.at("coefficients").get_to(g.coefficients);
}

inline void to_json(json& j, const RelationEntry& r) {
    j = json{{"degree", r.degree}, {"weight", r.weight}, {"coefficients", r.coefficients}};
}
inline void from_json(const json& j, RelationEntry& r) {
    j.at("degree").get_to(r.degree);
    j.at("weight").get_to(r.weight);
    j.at("coefficients").get_to(r.coefficients);
}

inline void to_json(json& j, const PresentationSection& p) {
    j = json{{"bound", p.bound}, {"generators", p.generators}, {"relations", p.relations}};
}
inline void from_json(const json& j, PresentationSection& p) {
    j.at("bound").get_to(p.bound);
    j.at("generators").get_to(p.generators);
    j.at("relations").get_to(p.relations);
}

inline void to_json(json& j, const CohomologyEntry& c) {
    j = json{{"n", c.n},
             {"degree", c.degree},
             {"dimension", c.dimension},
             {"cochain_dimension", c.cochain_dimension},
             {"blocks", c.blocks}};
    detail::put_optional(j, "invariant", c.invariant);
}
inline void from_json(const json& j, CohomologyEntry& c) {
    j.at("n").get_to(c.n);
    j.at("degree").get_to(c.degree);
    j.at("dimension").get_to(c.dimension);
    j.at("cochain_dimension").get_to(c.cochain_dimension);
    j.at("blocks").get_to(c.blocks);
    detail::get_optional(j, "invariant", c.invariant);
}

inline void to_json(json& j, const Discrepancy& d) {
    j = json{{"n", d.n}, {"degree", d.degree}, {"dimension", d.dimension}, {"dimension_check", d.dimension_check}};
}
inline void from_json(const json& j, Discrepancy& d) {
    j.at("n").get_to(d.n);
    j.at("degree").get_to(d.degree);
    j.at("dimension").get_to(d.dimension);
    j.at("dimension_check").get_to(d.dimension_check);
}

inline void to_json(json& j, const StabilitySection& s) {
    j = json{{"bound", s.bound}, {"check_bound", s.check_bound}, {"stable", s.stable}, {"discrepancies", s.discrepancies}};
}
inline void from_json(const json& j, StabilitySection& s) {
    j.at("bound").get_to(s.bound);
    j.at("check_bound").get_to(s.check_bound);
    j.at("stable").get_to(s.stable);
    j.at("discrepancies").get_to(s.discrepancies);
}

inline void to_json(json& j, const ModuleEcho& m) {
    j = json{{"generators", m.generators}, {"degrees", m.degrees}};
    detail::put_optional(j, "weights", m.weights);
    j["syzygies"] = m.syzygies;
}
inline void from_json(const json& j, ModuleEcho& m) {
    j.at("generators").get_to(m.generators);
    j.at("degrees").get_to(m.degrees);
    detail::get_optional(j, "weights", m.weights);
    j.at("syzygies").get_to(m.syzygies);
}

inline void to_json(json& j, const Violation& v) {
    j = json{{"kind", v.kind},
             {"relation", v.relation},
             {"generator", v.generator},
             {"residual", v.residual},
             {"message", v.message}};
}
inline void from_json(const json& j, Violation& v) {
    j.at("kind").get_to(v.kind);
    j.at("relation").get_to(v.relation);
    j.at("generator").get_to(v.generator);
    j.at("residual").get_to(v.residual);
    j.at("message").get_to(v.message);
}

inline void to_json(json& j, const ClassComponentEntry& c) {
    j = json{{"degree", c.degree}};
    detail::put_optional(j, "weight", c.weight);
    j["dimension"] = c.dimension;
    j["coordinates"] = c.coordinates;
}
inline void from_json(const json& j, ClassComponentEntry& c) {
    j.at("degree").get_to(c.degree);
    detail::get_optional(j, "weight", c.weight);
    j.at("dimension").get_to(c.dimension);
    j.at("coordinates").get_to(c.coordinates);
}

inline void to_json(json& j, const ClassSection& c) { j = json{{"zero", c.zero}, {"components", c.components}}; }
inline void from_json(const json& j, ClassSection& c) {
    j.at("zero").get_to(c.zero);
    j.at("components").get_to(c.components);
}

inline void to_json(json& j, const ConnectionAnalysis& a) {
    j = json{{"valid", a.valid}, {"violations", a.violations}, {"curvature", a.curvature}, {"integrable", a.integrable}};
    detail::put_optional(j, "integrability_class", a.integrability_class);
}
inline void from_json(const json& j, ConnectionAnalysis& a) {
    j.at("valid").get_to(a.valid);
    j.at("violations").get_to(a.violations);
    j.at("curvature").get_to(a.curvature);
    j.at("integrable").get_to(a.integrable);
    detail::get_optional(j, "integrability_class", a.integrability_class);
}

inline void to_json(json& j, const ModuliSection& m) {
    j = json{{"dimension", m.dimension}, {"unique", m.unique}};
    detail::put_optional(j, "equivalent", m.equivalent);
    detail::put_optional(j, "difference_class", m.difference_class);
}
inline void from_json(const json& j, ModuliSection& m) {
    j.at("dimension").get_to(m.dimension);
    j.at("unique").get_to(m.unique);
    detail::get_optional(j, "equivalent", m.equivalent);
    detail::get_optional(j, "difference_class", m.difference_class);
}

inline void to_json(json& j, const GammaEcho& g) {
    j = json{{"der", g.der}, {"module", g.module}, {"values", g.values}};
}
inline void from_json(const json& j, GammaEcho& g) {
    j.at("der").get_to(g.der);
    j.at("module").get_to(g.module);
    j.at("values").get_to(g.values);
}

inline void to_json(json& j, const ConnectionSection& c) {
    j = json{{"module", c.module}, {"equivariant", c.equivariant}, {"gamma", c.gamma}, {"given", c.given}};
    detail::put_optional(j, "averaged", c.averaged);
    detail::put_optional(j, "given_invariant", c.given_invariant);
    j["moduli"] = c.moduli;
    j["conclusion"] = c.conclusion;
}
inline void from_json(const json& j, ConnectionSection& c) {
    j.at("module").get_to(c.module);
    j.at("equivariant").get_to(c.equivariant);
    j.at("gamma").get_to(c.gamma);
    j.at("given").get_to(c.given);
    detail::get_optional(j, "averaged", c.averaged);
    detail::get_optional(j, "given_invariant", c.given_invariant);
    j.at("moduli").get_to(c.moduli);
    j.at("conclusion").get_to(c.conclusion);
}

inline void to_json(json& j, const Report& r) {
    j = json{{"schema", r.schema},
             {"command", r.command},
             {"ok", r.ok},
             {"exit_code", r.exit_code},
             {"input", r.input},
             {"quantities", r.quantities}};
    detail::put_optional(j, "check", r.check);
    detail::put_optional(j, "presentation", r.presentation);
    j["cohomology"] = r.cohomology;
    detail::put_optional(j, "stability", r.stability);
    detail::put_optional(j, "connection", r.connection);
    j["warnings"] = r.warnings;
    j["notes"] = r.notes;
    j["errors"] = r.errors;
}
inline void from_json(const json& j, Report& r) {
    j.at("schema").get_to(r.schema);
    if (r.schema != kSchema)
        throw std::runtime_error("unsupported report schema: " + r.schema);
    j.at("command").get_to(r.command);
    j.at("ok").get_to(r.ok);
    j.at("exit_code").get_to(r.exit_code);
    j.at("input").get_to(r.input);
    j.at("quantities").get_to(r.quantities);
    detail::get_optional(j, "check", r.check);
    detail::get_optional(j, "presentation", r.presentation);
    j.at("cohomology").get_to(r.cohomology);
    detail::get_optional(j, "stability", r.stability);
    detail::get_optional(j, "connection", r.connection);
    j.at("warnings").get_to(r.warnings);
    j.at("notes").get_to(r.notes);
    j.at("errors").get_to(r.errors);
}

inline std::string emit(const Report& r, int indent = 2) { return json(r).dump(indent); }

inline Report parse(const std::string& text) { return json::parse(text).get<Report>(); }

/// Blocks sum to totals and invariants equal the weight-0 block.
inline bool consistent(const Report& r) {
    for (const auto& c : r.cohomology) {
        if (!c.blocks.empty()) {
            int s = 0;
            for (int b : c.blocks)
                s += b;
            if (s != c.dimension)
                return false;
            if (c.invariant && *c.invariant != c.blocks.front())
                return false;
        }
    }
    return true;
}

} // namespace eqlr::report

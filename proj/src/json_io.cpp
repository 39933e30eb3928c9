#include "gaidec/json_io.hpp"

#include "gaidec/errors.hpp"

#include <cstddef>
#include <utility>

namespace gaidec::json_io {

namespace {

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ValidationError(where + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw ValidationError(where + ": missing key \"" + key + "\"");
    return *it;
}

int need_int(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number_integer()) throw ValidationError(where + ": key \"" + key + "\" must be an integer");
    return v.get<int>();
}

std::string need_string(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_string()) throw ValidationError(where + ": key \"" + key + "\" must be a string");
    return v.get<std::string>();
}

Rat as_rat(const json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return rat_parse(v.get<std::string>());
        } catch (const ValidationError& e) {
            throw ValidationError(where + ": " + e.what());
        }
    }
    if (v.is_number_integer()) return Rat(v.get<long>());
    throw ValidationError(where + ": expected a rational string");
}

GridPoint as_point(const json& v, int dim, const std::string& where) {
    if (!v.is_array()) throw ValidationError(where + ": expected a coordinate array");
    std::vector<int> coords;
    for (const json& c : v) {
        if (!c.is_number_integer()) throw ValidationError(where + ": coordinates must be integers");
        coords.push_back(c.get<int>());
    }
    if (dim >= 0 && static_cast<int>(coords.size()) != dim)
        throw ValidationError(where + ": expected " + std::to_string(dim) + " coordinates, got " +
                              std::to_string(coords.size()));
    return GridPoint(std::move(coords));
}

json point_array(const GridPoint& p) {
    json a = json::array();
    for (int c : p.coords) a.push_back(c);
    return a;
}

// dense table keyed by coordinate strings, emitted in grid order
json values_json(const LevelGrid& grid, const std::vector<Rat>& values, const RenderOptions& opts) {
    json obj = json::object();
    GridPoint p = grid.origin();
    std::size_t idx = 0;
    do {
        obj[grid_point_str(p)] = opts.render(values[idx++]);
    } while (grid.next(p));
    return obj;
}

std::vector<Rat> values_from_json(const LevelGrid& grid, const json& obj, const std::string& where) {
    if (!obj.is_object()) throw ValidationError(where + ": expected an object of values");
    if (obj.size() != grid.size())
        throw ValidationError(where + ": expected " + std::to_string(grid.size()) + " values, got " +
                              std::to_string(obj.size()));
    std::vector<Rat> values;
    values.reserve(grid.size());
    GridPoint p = grid.origin();
    do {
        const std::string key = grid_point_str(p);
        const auto it = obj.find(key);
        if (it == obj.end()) throw ValidationError(where + ": missing value for point " + key);
        values.push_back(as_rat(*it, where + "[" + key + "]"));
    } while (grid.next(p));
    return values;
}

void mark_inexact(json& j, const RenderOptions& opts) {
    if (!opts.exact()) j["exact"] = false;
}

} // namespace

std::string RenderOptions::render(const Rat& r) const { return exact() ? rat_str(r) : rat_decimal(r, decimal_digits); }

json parse_json(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(source + ": " + e.what());
    }
}

json game_json(const kary::KaryGame& v, const RenderOptions& opts) {
    json j;
    j["n"] = v.n;
    j["k"] = v.k;
    mark_inexact(j, opts);
    j["values"] = values_json(v.grid(), v.values, opts);
    return j;
}

kary::KaryGame game_from_json(const json& j) {
    const std::string where = "game";
    const int n = need_int(j, "n", where);
    const int k = need_int(j, "k", where);
    if (n < 1 || k < 1) throw ValidationError(where + ": n and k must be at least 1");
    kary::KaryGame v(n, k);
    v.values = values_from_json(v.grid(), need(j, "values", where), where + ".values");
    return v;
}

json mobius_json(const kary::MobiusMap& m, const RenderOptions& opts) {
    json j;
    j["n"] = m.n;
    j["k"] = m.k;
    mark_inexact(j, opts);
    json obj = json::object();
    for (const auto& [point, coef] : m.coeffs)
        if (coef != 0) obj[grid_point_str(point)] = opts.render(coef);
    j["mobius"] = std::move(obj);
    return j;
}

kary::MobiusMap mobius_from_json(const json& j) {
    const std::string where = "mobius";
    kary::MobiusMap m;
    m.n = need_int(j, "n", where);
    m.k = need_int(j, "k", where);
    if (m.n < 1 || m.k < 1) throw ValidationError(where + ": n and k must be at least 1");
    const LevelGrid grid = LevelGrid::uniform(m.n, m.k);
    const json& obj = need(j, "mobius", where);
    if (!obj.is_object()) throw ValidationError(where + ": key \"mobius\" must be an object");
    for (const auto& [key, value] : obj.items()) {
        GridPoint p = grid_point_parse(key, m.n);
        if (!grid.contains(p)) throw ValidationError(where + ": point " + key + " is out of range");
        Rat coef = as_rat(value, where + "[" + key + "]");
        if (coef != 0) m.coeffs.emplace(std::move(p), std::move(coef));
    }
    return m;
}

json capacity_report_json(const kary::CapacityReport& r, const RenderOptions& opts) {
    json j;
    j["zero_grounded"] = r.zero_grounded;
    j["monotone"] = r.monotone;
    j["normalized"] = r.normalized;
    j["ok"] = r.ok();
    mark_inexact(j, opts);
    json violations = json::array();
    for (const auto& v : r.violations) {
        json rec;
        rec["at"] = grid_point_str(v.at);
        if (v.to) rec["to"] = grid_point_str(*v.to);
        rec["what"] = v.what;
        violations.push_back(std::move(rec));
    }
    j["violations"] = std::move(violations);
    return j;
}

json attributes_json(const gai::AttributeSpace& space) {
    json arr = json::array();
    for (const auto& a : space.attributes) {
        json rec;
        rec["name"] = a.name;
        rec["levels"] = a.levels;
        arr.push_back(std::move(rec));
    }
    return arr;
}

gai::AttributeSpace attributes_from_json(const json& j) {
    const std::string where = "attributes";
    if (!j.is_array() || j.empty()) throw ValidationError(where + ": expected a nonempty array");
    gai::AttributeSpace space;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        gai::Attribute attr;
        attr.name = need_string(j[i], "name", at);
        const json& levels = need(j[i], "levels", at);
        if (!levels.is_array() || levels.empty()) throw ValidationError(at + ": \"levels\" must be a nonempty array");
        for (const json& level : levels) {
            if (!level.is_string()) throw ValidationError(at + ": level labels must be strings");
            attr.levels.push_back(level.get<std::string>());
        }
        space.attributes.push_back(std::move(attr));
    }
    space.validate();
    return space;
}

json model_json(const gai::GaiModel& m, const RenderOptions& opts) {
    json j;
    j["attributes"] = attributes_json(m.space);
    mark_inexact(j, opts);
    json terms = json::array();
    for (const auto& term : m.terms) {
        json rec;
        rec["scope"] = term.scope;
        rec["values"] = values_json(term.scope_grid(m.space), term.table, opts);
        terms.push_back(std::move(rec));
    }
    j["terms"] = std::move(terms);
    return j;
}

gai::GaiModel model_from_json(const json& j) {
    const std::string where = "model";
    gai::GaiModel m;
    m.space = attributes_from_json(need(j, "attributes", where));
    const json& terms = need(j, "terms", where);
    if (!terms.is_array()) throw ValidationError(where + ": \"terms\" must be an array");
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string at = where + ".terms[" + std::to_string(t) + "]";
        gai::GaiTerm term;
        const json& scope = need(terms[t], "scope", at);
        if (!scope.is_array()) throw ValidationError(at + ": \"scope\" must be an array");
        for (const json& s : scope) {
            if (!s.is_number_integer()) throw ValidationError(at + ": scope entries must be integers");
            term.scope.push_back(s.get<int>());
        }
        if (term.scope.empty()) throw ValidationError(at + ": empty scope");
        for (int axis : term.scope)
            if (axis < 0 || axis >= m.space.arity())
                throw ValidationError(at + ": scope attribute " + std::to_string(axis) + " is out of range");
        term.table = values_from_json(term.scope_grid(m.space), need(terms[t], "values", at), at + ".values");
        m.terms.push_back(std::move(term));
    }
    m.validate();
    return m;
}

json tabulated_json(const gai::TabulatedFunction& u, const RenderOptions& opts) {
    json j;
    j["attributes"] = attributes_json(u.space);
    mark_inexact(j, opts);
    j["values"] = values_json(u.space.grid(), u.values, opts);
    return j;
}

gai::TabulatedFunction tabulated_from_json(const json& j) {
    const std::string where = "function";
    gai::TabulatedFunction u;
    u.space = attributes_from_json(need(j, "attributes", where));
    u.values = values_from_json(u.space.grid(), need(j, "values", where), where + ".values");
    u.validate();
    return u;
}

json vertex_json(const polytope::VertexCapacity& v, const RenderOptions& opts) {
    json j;
    j["support"] = v.support;
    j["antichain"] = v.antichain;
    json obj = json::object();
    for (const auto& [point, coef] : v.mobius.coeffs) obj[grid_point_str(point)] = opts.render(coef);
    j["mobius"] = std::move(obj);
    return j;
}

json vertex_census_json(const polytope::VertexCensus& c) {
    json j;
    j["n"] = c.n;
    j["k"] = c.k;
    j["per_singleton"] = c.per_singleton.get_str();
    j["per_pair"] = c.per_pair.get_str();
    j["total"] = c.total.get_str();
    return j;
}

namespace {
json census_body(const decompose::ConstraintCensus& c) {
    json j;
    j["variables"] = c.variables.get_str();
    j["full_monotonicity_constraints"] = c.full_monotonicity_constraints.get_str();
    j["decomposed_monotonicity_constraints"] = c.decomposed_monotonicity_constraints.get_str();
    return j;
}
} // namespace

json constraint_census_json(const decompose::ConstraintCensus& c, const std::vector<int>& m) {
    json j;
    j["m"] = m;
    j.update(census_body(c));
    return j;
}

json constraint_census_json(const decompose::ConstraintCensus& c, int n, int k) {
    json j;
    j["n"] = n;
    j["k"] = k;
    j.update(census_body(c));
    return j;
}

json decomposition_json(const decompose::MonotoneGaiDecomposition& d, const RenderOptions& opts) {
    json j;
    j["n"] = d.n;
    j["k"] = d.k;
    mark_inexact(j, opts);
    const LevelGrid axis({d.k + 1});
    const LevelGrid plane({d.k + 1, d.k + 1});
    json singles = json::array();
    for (int i = 0; i < d.n; ++i) {
        json rec;
        rec["i"] = i;
        rec["values"] = values_json(axis, d.singleton[static_cast<std::size_t>(i)], opts);
        singles.push_back(std::move(rec));
    }
    j["singletons"] = std::move(singles);
    json pairs = json::array();
    for (int i = 0; i < d.n; ++i)
        for (int jj = i + 1; jj < d.n; ++jj) {
            json rec;
            rec["i"] = i;
            rec["j"] = jj;
            rec["values"] = values_json(plane, d.pair[static_cast<std::size_t>(d.pair_index(i, jj))], opts);
            pairs.push_back(std::move(rec));
        }
    j["pairs"] = std::move(pairs);
    return j;
}

decompose::MonotoneGaiDecomposition decomposition_from_json(const json& j) {
    const std::string where = "decomposition";
    decompose::MonotoneGaiDecomposition d;
    d.n = need_int(j, "n", where);
    d.k = need_int(j, "k", where);
    if (d.n < 1 || d.k < 1) throw ValidationError(where + ": n and k must be at least 1");
    const LevelGrid axis({d.k + 1});
    const LevelGrid plane({d.k + 1, d.k + 1});
    d.singleton.assign(static_cast<std::size_t>(d.n), {});
    d.pair.assign(static_cast<std::size_t>(d.n) * (d.n - 1) / 2, {});

    const json& singles = need(j, "singletons", where);
    if (!singles.is_array()) throw ValidationError(where + ": \"singletons\" must be an array");
    for (std::size_t t = 0; t < singles.size(); ++t) {
        const std::string at = where + ".singletons[" + std::to_string(t) + "]";
        const int i = need_int(singles[t], "i", at);
        if (i < 0 || i >= d.n) throw ValidationError(at + ": attribute index out of range");
        auto& table = d.singleton[static_cast<std::size_t>(i)];
        if (!table.empty()) throw ValidationError(at + ": duplicate table for attribute " + std::to_string(i));
        table = values_from_json(axis, need(singles[t], "values", at), at + ".values");
    }
    const json& pairs = need(j, "pairs", where);
    if (!pairs.is_array()) throw ValidationError(where + ": \"pairs\" must be an array");
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        const std::string at = where + ".pairs[" + std::to_string(t) + "]";
        const int i = need_int(pairs[t], "i", at);
        const int jj = need_int(pairs[t], "j", at);
        if (i < 0 || jj <= i || jj >= d.n) throw ValidationError(at + ": pair indices must satisfy 0 <= i < j < n");
        auto& table = d.pair[static_cast<std::size_t>(d.pair_index(i, jj))];
        if (!table.empty())
            throw ValidationError(at + ": duplicate table for pair " + std::to_string(i) + "," + std::to_string(jj));
        table = values_from_json(plane, need(pairs[t], "values", at), at + ".values");
    }
    for (int i = 0; i < d.n; ++i)
        if (d.singleton[static_cast<std::size_t>(i)].empty())
            throw ValidationError(where + ": missing table for attribute " + std::to_string(i));
    for (int i = 0; i < d.n; ++i)
        for (int jj = i + 1; jj < d.n; ++jj)
            if (d.pair[static_cast<std::size_t>(d.pair_index(i, jj))].empty())
                throw ValidationError(where + ": missing table for pair " + std::to_string(i) + "," +
                                      std::to_string(jj));
    d.validate();
    return d;
}

json combination_json(const decompose::ConvexCombination& combo, const RenderOptions& opts) {
    json arr = json::array();
    for (const auto& [vertex, weight] : combo.atoms) {
        json rec;
        rec["vertex"] = vertex_json(vertex, opts);
        rec["weight"] = opts.render(weight);
        arr.push_back(std::move(rec));
    }
    return arr;
}

json dataset_json(const elicit::PreferenceDataset& d) {
    json j;
    j["attributes"] = attributes_json(d.space);
    json strict = json::array();
    for (const auto& [better, worse] : d.strict) {
        json rec;
        rec["better"] = point_array(better);
        rec["worse"] = point_array(worse);
        strict.push_back(std::move(rec));
    }
    j["strict"] = std::move(strict);
    json weak = json::array();
    for (const auto& [better, worse] : d.weak) {
        json rec;
        rec["better"] = point_array(better);
        rec["worse"] = point_array(worse);
        weak.push_back(std::move(rec));
    }
    j["weak"] = std::move(weak);
    json assignments = json::array();
    for (const auto& a : d.assignments) {
        json rec;
        rec["alt"] = point_array(a.alt);
        rec["category"] = a.category;
        assignments.push_back(std::move(rec));
    }
    j["assignments"] = std::move(assignments);
    return j;
}

elicit::PreferenceDataset dataset_from_json(const json& j) {
    const std::string where = "dataset";
    elicit::PreferenceDataset d;
    d.space = attributes_from_json(need(j, "attributes", where));
    const int dim = d.space.arity();
    const auto read_pairs = [&](const char* key, auto& out) {
        const auto it = j.find(key);
        if (it == j.end()) return;
        if (!it->is_array()) throw ValidationError(where + ": \"" + key + "\" must be an array");
        for (std::size_t t = 0; t < it->size(); ++t) {
            const std::string at = where + "." + key + "[" + std::to_string(t) + "]";
            out.emplace_back(as_point(need((*it)[t], "better", at), dim, at + ".better"),
                             as_point(need((*it)[t], "worse", at), dim, at + ".worse"));
        }
    };
    read_pairs("strict", d.strict);
    read_pairs("weak", d.weak);
    if (const auto it = j.find("assignments"); it != j.end()) {
        if (!it->is_array()) throw ValidationError(where + ": \"assignments\" must be an array");
        for (std::size_t t = 0; t < it->size(); ++t) {
            const std::string at = where + ".assignments[" + std::to_string(t) + "]";
            elicit::PreferenceDataset::Assignment a;
            a.alt = as_point(need((*it)[t], "alt", at), dim, at + ".alt");
            a.category = need_int((*it)[t], "category", at);
            d.assignments.push_back(std::move(a));
        }
    }
    d.validate();
    return d;
}

json elicitation_json(const elicit::ElicitationResult& r, const RenderOptions& opts) {
    json j;
    const bool consistent = r.status == elicit::ElicitationResult::Status::Consistent;
    j["status"] = consistent ? "consistent" : "infeasible_with_certificate";
    mark_inexact(j, opts);
    j["margin"] = opts.render(r.margin);
    if (consistent) {
        j["model"] = decomposition_json(*r.model, opts);
        json t = json::array();
        for (const Rat& v : r.thresholds) t.push_back(opts.render(v));
        j["thresholds"] = std::move(t);
    } else {
        j["certificate_kind"] = r.certificate_kind;
        json c = json::array();
        for (const Rat& v : r.certificate) c.push_back(opts.render(v));
        j["certificate"] = std::move(c);
    }
    return j;
}

json soft_fit_json(const elicit::SoftFit& f, const RenderOptions& opts) {
    json j;
    j["total_violation"] = opts.render(f.total_violation);
    mark_inexact(j, opts);
    j["model"] = decomposition_json(f.model, opts);
    json t = json::array();
    for (const Rat& v : f.thresholds) t.push_back(opts.render(v));
    j["thresholds"] = std::move(t);
    return j;
}

} // namespace gaidec::json_io

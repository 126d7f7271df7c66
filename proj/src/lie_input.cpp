#include "qcgeo/lie_input.hpp"

#include "json.hpp"

#include <set>

namespace qcgeo {

using json = nlohmann::ordered_json;

CoframeModel abelian_model(std::string name, int n, int isotropy) {
    CoframeModel m;
    m.name = std::move(name);
    m.n = n;
    m.isotropy = isotropy;
    m.differentials.assign(m.dimension(), Tensor(Signature::form(2), m.layout()));
    return m;
}

namespace {

int expect_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    return j.get<int>();
}

}  // namespace

CoframeModel parse_model(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("model document must be an object");
    if (!doc.contains("name") || !doc["name"].is_string()) throw ParseError("missing string field 'name'");
    if (!doc.contains("n")) throw ParseError("missing field 'n'");
    const int n = expect_int(doc["n"], "n");
    if (n < 1) throw ParseError("n must be at least 1");
    int isotropy = 0;
    if (doc.contains("isotropy")) {
        isotropy = expect_int(doc["isotropy"], "isotropy");
        if (isotropy < 0) throw ParseError("isotropy must be non-negative");
    }
    if (4 * n + 3 + isotropy > 255) throw ParseError("model dimension too large");
    CoframeModel m = abelian_model(doc["name"].get<std::string>(), n, isotropy);
    if (!doc.contains("d")) return m;
    if (!doc["d"].is_object()) throw ParseError("field 'd' must be an object");
    for (const auto& [row_key, entries] : doc["d"].items()) {
        const std::string where = "d[" + row_key + "]";
        int i = 0;
        try {
            std::size_t used = 0;
            i = std::stoi(row_key, &used);
            if (used != row_key.size()) throw std::invalid_argument(row_key);
        } catch (const std::exception&) {
            throw ParseError(where + ": row key is not an integer");
        }
        if (i < 1 || i > m.dimension()) throw ParseError(where + ": index out of range");
        if (!entries.is_array()) throw ParseError(where + ": expected an array");
        std::set<std::pair<int, int>> seen;
        for (std::size_t e = 0; e < entries.size(); ++e) {
            const auto& entry = entries[e];
            const std::string at = where + "[" + std::to_string(e) + "]";
            if (!entry.is_object() || !entry.contains("c") || !entry.contains("jk"))
                throw ParseError(at + ": expected {\"c\", \"jk\"}");
            if (!entry["c"].is_string()) throw ParseError(at + ": coefficient must be a string");
            Rational c;
            try {
                c = parse_rational(entry["c"].get<std::string>());
            } catch (const ParseError& err) {
                throw ParseError(at + ": " + err.what());
            }
            const auto& jk = entry["jk"];
            if (!jk.is_array() || jk.size() != 2) throw ParseError(at + ": 'jk' must be a pair");
            const int j = expect_int(jk[0], at + ".jk");
            const int k = expect_int(jk[1], at + ".jk");
            if (j < 1 || k > m.dimension()) throw ParseError(at + ": index out of range");
            if (j >= k) throw ParseError(at + ": requires j < k");
            if (!seen.insert({j, k}).second) throw ParseError(at + ": duplicate pair");
            m.differentials[i - 1].add(Key{j - 1, k - 1}, c);
        }
    }
    return m;
}

std::string serialize_model(const CoframeModel& model) {
    json doc;
    doc["name"] = model.name;
    doc["n"] = model.n;
    if (model.isotropy > 0) doc["isotropy"] = model.isotropy;
    json rows = json::object();
    for (int i = 0; i < model.dimension(); ++i) {
        const auto& form = model.differentials[i];
        if (form.is_zero()) continue;
        json entries = json::array();
        for (const auto& [k, c] : form.terms())
            entries.push_back({{"c", to_string(c)}, {"jk", {k[0] + 1, k[1] + 1}}});
        rows[std::to_string(i + 1)] = std::move(entries);
    }
    doc["d"] = std::move(rows);
    return doc.dump(2) + "\n";
}

Tensor d(const Tensor& form, const CoframeModel& model) {
    const Signature& sig = form.signature();
    const int deg = sig.form_degree();
    if (deg == 0) return Tensor(Signature::form(1).concat(sig), form.layout());
    Tensor out(sig.with_form_degree(deg + 1), form.layout());
    for (const auto& [k, v] : form.terms()) {
        for (int p = 0; p < deg; ++p) {
            const Rational sign = p % 2 == 0 ? Rational(1) : Rational(-1);
            for (const auto& [dk, c] : model.differentials[k[p]].terms()) {
                Key raw = k.slice(0, p).append(dk).append(k.slice(p + 1, k.size - p - 1));
                out.add(raw, sign * c * v);
            }
        }
    }
    return out;
}

std::vector<JacobiFailure> validate_jacobi(const CoframeModel& model) {
    std::vector<JacobiFailure> failures;
    for (int i = 0; i < model.dimension(); ++i) {
        Tensor r = d(model.differentials[i], model);
        if (!r.is_zero()) failures.push_back({i, std::move(r)});
    }
    return failures;
}

CoframeModel change_coframe(const CoframeModel& model, const Matrix& p) {
    const int dim = model.dimension();
    if (static_cast<int>(p.size()) != dim) throw StructuralError("frame change has the wrong size");
    const auto q = inverse(p);
    if (!q) throw StructuralError("frame change is singular");
    CoframeModel out = abelian_model(model.name, model.n, model.isotropy);
    for (int i = 0; i < dim; ++i) {
        // Σ_l P[i][l] de^l in the old coframe, then e^j = Σ_m Q[j][m] ẽ^m.
        Tensor old_basis(Signature::form(2), model.layout());
        for (int l = 0; l < dim; ++l)
            if (!is_zero(p[i][l])) old_basis += p[i][l] * model.differentials[l];
        Tensor& target = out.differentials[i];
        for (const auto& [k, c] : old_basis.terms())
            for (int a = 0; a < dim; ++a) {
                if (is_zero((*q)[k[0]][a])) continue;
                for (int b = 0; b < dim; ++b)
                    if (!is_zero((*q)[k[1]][b])) target.add(Key{a, b}, c * (*q)[k[0]][a] * (*q)[k[1]][b]);
            }
    }
    return out;
}

}  // namespace qcgeo

#include "hoch/jsonio.hpp"

#include <fstream>
#include <map>
#include <set>
#include <json.hpp>

namespace hoch {

using nlohmann::json;

static void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw SchemaError("unknown field '" + it.key() + "' in " + where);
}

static const json& need(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw SchemaError("missing field '" + key + "' in " + where);
    return j.at(key);
}

AlgebraFile parse_algebra_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    check_keys(j, {"field", "basis", "unit", "mult", "diff", "aug", "frobenius"}, "algebra file");

    AlgebraFile out;
    DgAlgebra& a = out.algebra;
    a.field = Field::parse(need(j, "field", "algebra file").get<std::string>());

    std::map<std::string, int> index;
    for (const auto& b : need(j, "basis", "algebra file")) {
        check_keys(b, {"name", "degree"}, "basis entry");
        std::string name = need(b, "name", "basis entry").get<std::string>();
        if (index.count(name)) throw SchemaError("duplicate basis name '" + name + "'");
        index[name] = a.dim();
        a.names.push_back(name);
        a.degree.push_back(need(b, "degree", "basis entry").get<int>());
    }
    const int n = a.dim();
    if (n == 0) throw SchemaError("empty basis");

    auto idx = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end()) throw SchemaError("unknown basis name '" + name + "'");
        return it->second;
    };

    a.unit = idx(need(j, "unit", "algebra file").get<std::string>());

    a.mult.assign(n, std::vector<SparseVec>(n));
    for (const auto& row : need(j, "mult", "algebra file")) {
        if (!row.is_array() || row.size() != 4) throw SchemaError("mult entry must be [i, j, k, scalar]");
        a.mult[idx(row[0])][idx(row[1])].add(idx(row[2]), Scalar::parse(a.field, row[3].get<std::string>()));
    }
    // products with the unit are implicit unless overridden
    for (int i = 0; i < n; ++i) {
        if (a.mult[a.unit][i].empty()) a.mult[a.unit][i] = SparseVec::unit(i, Scalar::one(a.field));
        if (a.mult[i][a.unit].empty()) a.mult[i][a.unit] = SparseVec::unit(i, Scalar::one(a.field));
    }

    a.diff = SparseMatrix(n, n, a.field);
    if (j.contains("diff")) {
        for (const auto& row : j.at("diff")) {
            if (!row.is_array() || row.size() != 3) throw SchemaError("diff entry must be [from, to, scalar]");
            a.diff.add(idx(row[1]), idx(row[0]), Scalar::parse(a.field, row[2].get<std::string>()));
        }
    }

    a.aug.assign(n, Scalar::zero(a.field));
    a.aug[a.unit] = Scalar::one(a.field);
    if (j.contains("aug")) {
        for (auto& s : a.aug) s = Scalar::zero(a.field);
        for (const auto& row : j.at("aug")) {
            if (!row.is_array() || row.size() != 2) throw SchemaError("aug entry must be [name, scalar]");
            a.aug[idx(row[0])] = Scalar::parse(a.field, row[1].get<std::string>());
        }
    }

    if (j.contains("frobenius")) {
        const json& fj = j.at("frobenius");
        check_keys(fj, {"degree", "coproduct", "counit", "pairing"}, "frobenius block");
        FrobeniusData fd;
        fd.degree = need(fj, "degree", "frobenius block").get<int>();
        fd.cop.assign(n, {});
        for (const auto& row : need(fj, "coproduct", "frobenius block")) {
            if (!row.is_array() || row.size() != 4) throw SchemaError("coproduct entry must be [i, j, k, scalar]");
            fd.cop[idx(row[0])].push_back({{idx(row[1]), idx(row[2])}, Scalar::parse(a.field, row[3].get<std::string>())});
        }
        if (fj.contains("counit")) {
            std::vector<Scalar> eta(n, Scalar::zero(a.field));
            for (const auto& row : fj.at("counit")) {
                if (!row.is_array() || row.size() != 2) throw SchemaError("counit entry must be [name, scalar]");
                eta[idx(row[0])] = Scalar::parse(a.field, row[1].get<std::string>());
            }
            fd.counit = std::move(eta);
        }
        if (fj.contains("pairing")) {
            SparseMatrix p(n, n, a.field);
            for (const auto& row : fj.at("pairing")) {
                if (!row.is_array() || row.size() != 3) throw SchemaError("pairing entry must be [i, j, scalar]");
                p.add(idx(row[0]), idx(row[1]), Scalar::parse(a.field, row[2].get<std::string>()));
            }
            fd.pairing = std::move(p);
        }
        out.frobenius = std::move(fd);
    }
    return out;
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open algebra file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_algebra_json(text);
}

std::string algebra_to_json(const AlgebraFile& af) {
    const DgAlgebra& a = af.algebra;
    json j;
    j["field"] = a.field.str();
    j["basis"] = json::array();
    for (int i = 0; i < a.dim(); ++i) j["basis"].push_back({{"name", a.names[i]}, {"degree", a.degree[i]}});
    j["unit"] = a.names[a.unit];
    json mult = json::array();
    for (int i = 0; i < a.dim(); ++i)
        for (int k = 0; k < a.dim(); ++k)
            for (const auto& [x, c] : a.mult[i][k].entries())
                mult.push_back({a.names[i], a.names[k], a.names[x], c.str()});
    j["mult"] = mult;
    json diff = json::array();
    for (int i = 0; i < a.dim(); ++i)
        for (const auto& [x, c] : a.diff.col(i).entries()) diff.push_back({a.names[i], a.names[x], c.str()});
    if (!diff.empty()) j["diff"] = diff;
    json aug = json::array();
    for (int i = 0; i < a.dim(); ++i)
        if (!a.aug[i].is_zero()) aug.push_back({a.names[i], a.aug[i].str()});
    j["aug"] = aug;
    if (af.frobenius) {
        const FrobeniusData& fd = *af.frobenius;
        json fj;
        fj["degree"] = fd.degree;
        json cop = json::array();
        for (int i = 0; i < a.dim(); ++i)
            for (const auto& [jk, c] : fd.cop[i]) cop.push_back({a.names[i], a.names[jk.first], a.names[jk.second], c.str()});
        fj["coproduct"] = cop;
        if (fd.counit) {
            json eta = json::array();
            for (int i = 0; i < a.dim(); ++i)
                if (!(*fd.counit)[i].is_zero()) eta.push_back({a.names[i], (*fd.counit)[i].str()});
            fj["counit"] = eta;
        }
        if (fd.pairing) {
            json p = json::array();
            for (int jcol = 0; jcol < fd.pairing->cols(); ++jcol)
                for (const auto& [i, c] : fd.pairing->col(jcol).entries()) p.push_back({a.names[i], a.names[jcol], c.str()});
            fj["pairing"] = p;
        }
        j["frobenius"] = fj;
    }
    return j.dump(2);
}

}  // namespace hoch

#include "crystk/assembly.hpp"

#include "crystk/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace crystk {

KTheoryResult k_theory(const std::string& label)
{
    const CrystGroup& g = catalog_entry(label);
    HfinResult fin = assemble_hfin(g.label);

    KTheoryResult out;
    out.label = g.label;
    out.k_minus1 = fin.h_minus1; // line cokernels vanish at n = -1
    out.k0_tilde = fin.h0;
    out.wh = fin.h1;
    for (const ParamLine& l : t_double_prime(g)) {
        VCStructure s = vc_structure(g, l);
        out.k0_tilde += cokernel(s, 0);
        out.wh += cokernel(s, 1);
    }
    return out;
}

const std::vector<KTheoryResult>& k_theory_all()
{
    static const std::vector<KTheoryResult> all = [] {
        std::vector<KTheoryResult> out;
        for (const CrystGroup& g : catalog())
            out.push_back(k_theory(g.label));
        return out;
    }();
    return all;
}

namespace {

using nlohmann::json;

const json& golden()
{
    static const json parsed = json::parse(goldens::json_text());
    return parsed;
}

Vec3 parse_point(const std::string& text)
{
    std::istringstream in(text);
    std::string part;
    Vec3 out = vec(0, 0, 0);
    for (int i = 0; i < 3; ++i) {
        std::getline(in, part, ',');
        out[i] = ExactScalar::parse(part);
    }
    return out;
}

struct Checker {
    GoldenReport report;

    void mismatch(const std::string& table, const std::string& what)
    {
        report.mismatches.push_back(table + ": " + what);
    }
    void require(bool ok, const std::string& table, const std::string& what)
    {
        if (!ok)
            mismatch(table, what);
    }
};

void check_table3(Checker& c)
{
    const json& t = golden()["table3"];
    c.require(catalog().size() == t["labels"].size(), "table3", "catalog count");
    std::vector<std::string> labels;
    for (const CrystGroup& g : catalog())
        labels.push_back(g.label);
    std::vector<std::string> expected = t["labels"].get<std::vector<std::string>>();
    c.require(labels == expected, "table3", "catalog labels");
    for (int i = 1; i <= 7; ++i) {
        c.require(catalog_lattice_count(i) == t["counts"][i - 1].get<int>(), "table3",
                  "count for lattice " + std::to_string(i));
        c.require(maximal_group(i).label == t["maximal"][i - 1].get<std::string>(),
                  "table3", "maximal group " + std::to_string(i));
    }
    CatalogReport v = verify_catalog(2);
    c.require(v.consistent, "table3", "pairwise distinctness");
}

void check_table4(Checker& c)
{
    const json& t = golden()["table4"];
    for (int i = 0; i <= static_cast<int>(FinGroupType::S4xZ2); ++i) {
        FinGroupType type = static_cast<FinGroupType>(i);
        std::string name = to_string(type);
        KExpr km1 = wh_table(type, -1), k0 = wh_table(type, 0), wh = wh_table(type, 1);
        if (t.contains(name)) {
            c.require(km1 == KExpr::parse(t[name][0]), "table4", name + " K_-1");
            c.require(k0 == KExpr::parse(t[name][1]), "table4", name + " K0~");
            c.require(wh == KExpr::parse(t[name][2]), "table4", name + " Wh");
        } else {
            c.require(km1.is_zero() && k0.is_zero() && wh.is_zero(), "table4",
                      name + " should vanish");
        }
    }
}

void check_cells(Checker& c)
{
    const json& t = golden()["cells"];
    for (auto it = t.begin(); it != t.end(); ++it) {
        const std::string label = it.key();
        const CrystGroup& g = catalog_entry(label);
        const CellComplex& computed = catalog_cells(label);
        const json& rows = it.value();

        c.require(computed.cells.size() == rows.size(), "cells",
                  label + " cell count " + std::to_string(computed.cells.size())
                      + " != " + std::to_string(rows.size()));

        std::vector<bool> matched(computed.cells.size(), false);
        for (const json& row : rows) {
            CellOrbit paper;
            paper.dim = row[0].get<int>();
            for (const json& p : row[1])
                paper.points.push_back(parse_point(p.get<std::string>()));

            // Recompute the stabilizer at the printed position.
            std::vector<Mat3> stab = paper.dim == 0
                ? point_stabilizer(g, paper.points[0]).image
                : cell_pointwise_stabilizer(g, paper.points);
            if (!row[2].is_null()) {
                const PointGroup& named =
                    standard_point_group(row[2].get<std::string>());
                c.require(stab == named.elements, "cells",
                          label + " stabilizer at " + paper.points[0].str());
            }
            c.require(to_string(finite_iso_type(stab)) == row[3].get<std::string>(),
                      "cells", label + " type at " + paper.points[0].str());

            // The printed cell corresponds to exactly one computed orbit.
            int hits = 0;
            for (std::size_t i = 0; i < computed.cells.size(); ++i)
                if (computed.cells[i].dim == paper.dim
                    && cells_equivalent(g, computed.cells[i], paper)) {
                    ++hits;
                    matched[i] = true;
                }
            c.require(hits == 1, "cells",
                      label + " orbit multiplicity at " + paper.points[0].str());
        }
        for (std::size_t i = 0; i < matched.size(); ++i)
            c.require(matched[i], "cells", label + " extra computed orbit");
    }
}

void check_table12(Checker& c)
{
    const json& t = golden()["table12"];
    for (const CrystGroup& g : catalog()) {
        HfinResult r = assemble_hfin(g.label);
        c.require(r.h1.is_zero(), "table12", g.label + " H_1");
        if (t.contains(g.label)) {
            c.require(r.h_minus1 == KExpr::parse(t[g.label][0]), "table12",
                      g.label + " H_-1");
            c.require(r.h0 == KExpr::parse(t[g.label][1]), "table12", g.label + " H_0");
        } else {
            c.require(r.h_minus1.is_zero() && r.h0.is_zero(), "table12",
                      g.label + " should vanish");
        }
    }
}

void check_lines(Checker& c)
{
    const json& t = golden()["lines"];
    for (const CrystGroup& g : catalog()) {
        const auto& computed = t_double_prime(g);
        if (!t.contains(g.label)) {
            c.require(computed.empty(), "lines", g.label + " should have no lines");
            continue;
        }
        const json& rows = t[g.label];
        c.require(computed.size() == rows.size(), "lines",
                  g.label + " line count " + std::to_string(computed.size()) + " != "
                      + std::to_string(rows.size()));
        std::vector<bool> matched(computed.size(), false);
        for (const json& row : rows) {
            ParamLine paper = ParamLine::make(g.lattice,
                                              parse_point(row[0].get<std::string>()),
                                              parse_point(row[1].get<std::string>()));
            const PointGroup& named = standard_point_group(row[2].get<std::string>());
            c.require(strict_stabilizer(g, paper).image == named.elements, "lines",
                      g.label + " strict stabilizer of " + paper.str());
            int hits = 0;
            for (std::size_t i = 0; i < computed.size(); ++i)
                if (lines_equivalent(g, computed[i], paper)) {
                    ++hits;
                    matched[i] = true;
                }
            c.require(hits == 1, "lines", g.label + " orbit multiplicity of " + paper.str());
        }
        for (std::size_t i = 0; i < matched.size(); ++i)
            c.require(matched[i], "lines", g.label + " extra computed line");
    }
}

void check_structures(Checker& c)
{
    const json& t = golden()["structures"];
    for (const CrystGroup& g : catalog()) {
        std::map<std::string, int> counts;
        for (const ParamLine& l : t_double_prime(g))
            ++counts[vc_structure(g, l).str()];
        std::map<std::string, int> expected;
        if (t.contains(g.label))
            for (auto it = t[g.label].begin(); it != t[g.label].end(); ++it)
                expected[it.key()] = it.value().get<int>();
        if (counts != expected) {
            std::ostringstream os;
            os << g.label << " structures:";
            for (const auto& [name, n] : counts)
                os << " " << name << " x" << n;
            c.mismatch("structures", os.str());
        }
    }
}

void check_table13(Checker& c)
{
    const json& t = golden()["table13"];
    for (int i = 0; i < static_cast<int>(VCType::Negligible); ++i) {
        VCType type = static_cast<VCType>(i);
        std::string name = to_string(type);
        c.require(t.contains(name), "table13", name + " missing from golden");
        if (!t.contains(name))
            continue;
        c.require(cokernel(type, 0) == KExpr::parse(t[name][0]), "table13", name + " n=0");
        c.require(cokernel(type, 1) == KExpr::parse(t[name][1]), "table13", name + " n=1");
        c.require(cokernel(type, -1).is_zero(), "table13", name + " n=-1");
    }
}

void check_table14_15(Checker& c)
{
    const json& t = golden()["table14_15"];
    for (const KTheoryResult& r : k_theory_all()) {
        if (t.contains(r.label)) {
            c.require(r.k_minus1 == KExpr::parse(t[r.label][0]), "table14_15",
                      r.label + " K_-1");
            c.require(r.k0_tilde == KExpr::parse(t[r.label][1]), "table14_15",
                      r.label + " K0~");
            c.require(r.wh == KExpr::parse(t[r.label][2]), "table14_15",
                      r.label + " Wh");
        } else {
            c.require(r.k_minus1.is_zero() && r.k0_tilde.is_zero() && r.wh.is_zero(),
                      "table14_15", r.label + " should vanish");
        }
    }
}

} // namespace

GoldenReport run_goldens()
{
    Checker c;
    check_table3(c);
    check_table4(c);
    check_cells(c);
    check_table12(c);
    check_lines(c);
    check_structures(c);
    check_table13(c);
    check_table14_15(c);
    c.report.tables_checked = 8;
    c.report.ok = c.report.mismatches.empty();
    return c.report;
}

} // namespace crystk

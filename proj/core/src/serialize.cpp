#include "crystk/serialize.hpp"

#include "crystk/errors.hpp"

namespace crystk {

using nlohmann::json;

json to_json(const ExactScalar& s) { return s.str(); }

json to_json(const Vec3& v) { return json::array({v.x.str(), v.y.str(), v.z.str()}); }

json to_json(const Mat3& m)
{
    json rows = json::array();
    for (int r = 0; r < 3; ++r)
        rows.push_back(json::array(
            {m(r, 0).str(), m(r, 1).str(), m(r, 2).str()}));
    return rows;
}

json to_json(const AffineIsometry& g)
{
    return {{"translation", to_json(g.translation)}, {"linear", to_json(g.linear)}};
}

json to_json(const KExpr& e)
{
    return {{"Z", e.z_rank},       {"Z2", e.z2},
            {"Z4", e.z4},          {"inf_Z2", e.inf_z2},
            {"inf_Z4", e.inf_z4},  {"NK1_ZD4", e.nk_d4},
            {"NK1_ZD6", e.nk_d6},  {"pretty", e.str()}};
}

json to_json(const PointGroup& g)
{
    json elements = json::array();
    for (const Mat3& m : g.elements)
        elements.push_back(to_json(m));
    return {{"name", g.name}, {"elements", elements}};
}

json catalog_entry_json(const CrystGroup& g)
{
    json basis = json::array();
    for (const Vec3& b : g.lattice.basis())
        basis.push_back(to_json(b));
    json elements = json::array();
    for (const Mat3& m : g.point_group.elements)
        elements.push_back(to_json(m));
    return {{"label", g.label},
            {"lattice_basis", basis},
            {"point_group_name", g.point_group.name},
            {"point_group_elements", elements}};
}

json catalog_json()
{
    json out = json::array();
    for (const CrystGroup& g : catalog())
        out.push_back(catalog_entry_json(g));
    return out;
}

json domain_json(const FundamentalDomain& d)
{
    json sides = json::array();
    for (const Side& s : d.sides)
        sides.push_back({{"normal", to_json(s.normal)}, {"offset", s.offset.str()}});
    json pairings = json::array();
    for (std::size_t i = 0; i < d.pairings.size(); ++i)
        pairings.push_back({{"side", static_cast<int>(i + 1)},
                            {"isometry", to_json(d.pairings[i])}});
    json vertices = json::array();
    for (const Vec3& v : d.vertices)
        vertices.push_back(to_json(v));
    json subdivision = json::array();
    for (const Vec3& v : d.subdivision_vertices)
        subdivision.push_back(to_json(v));
    return {{"sides", sides},
            {"pairings", pairings},
            {"vertices", vertices},
            {"subdivision_vertices", subdivision}};
}

namespace {

// The registry name of a matrix set, when one matches.
std::string group_name_or_type(const std::vector<Mat3>& elements)
{
    static const std::vector<std::string> known = [] {
        std::vector<std::string> names = standard_point_group_names();
        for (const char* extra :
             {"D4+_1", "D4+_2", "D'_4_1", "D'_4_2", "D4''_1", "D4''_2", "D'_2_1",
              "D'_2_2", "Dhat'_4", "Dhat'_6", "<A,B>", "<A,C>", "<A,D>", "<D,E>",
              "<E,F>", "D4+_1x(-1)", "D4+_2x(-1)", "<A,C>x(-1)"})
            names.push_back(extra);
        return names;
    }();
    for (const std::string& name : known)
        if (standard_point_group(name).elements == elements)
            return name;
    return to_string(finite_iso_type(elements));
}

} // namespace

json cells_json(const std::string& label)
{
    const CrystGroup& g = catalog_entry(label);
    json out = json::array();
    for (const CellOrbit& c : catalog_cells(g.label).cells) {
        json points = json::array();
        for (const Vec3& p : c.points)
            points.push_back(to_json(p));
        out.push_back({{"dim", c.dim},
                       {"points", points},
                       {"stabilizer", group_name_or_type(c.stabilizer_image)},
                       {"type", to_string(c.type)}});
    }
    return out;
}

json lines_json(const std::string& label)
{
    const CrystGroup& g = catalog_entry(label);
    json out = json::array();
    for (const ParamLine& l : t_double_prime(g)) {
        VCStructure s = vc_structure(g, l);
        json structure;
        if (s.is_semidirect)
            structure = {{"kind", "semidirect"},
                         {"fiber", to_string(s.fiber)},
                         {"twisted", s.twisted}};
        else
            structure = {{"kind", "amalgam"},
                         {"left", to_string(s.left)},
                         {"amalgamated", to_string(s.amalgamated)},
                         {"right", to_string(s.right)}};
        structure["name"] = s.str();
        out.push_back(
            {{"line", {{"t", to_json(l.offset)}, {"v", to_json(l.direction)}}},
             {"strict_stabilizer_name",
              group_name_or_type(strict_stabilizer(g, l).image)},
             {"structure", structure},
             {"cokernel_n0", to_json(cokernel(s, 0))},
             {"cokernel_n1", to_json(cokernel(s, 1))}});
    }
    return out;
}

json ktheory_json(const KTheoryResult& r)
{
    return {{"label", r.label},
            {"K_minus1", to_json(r.k_minus1)},
            {"K0_tilde", to_json(r.k0_tilde)},
            {"Wh", to_json(r.wh)}};
}

} // namespace crystk

#include "crystk/kexpr.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace crystk {

std::string KExpr::str() const
{
    if (is_zero())
        return "0";
    std::vector<std::string> parts;
    auto power = [](const std::string& base, long n) {
        if (n == 1)
            return base;
        std::string wrapped = base.find('/') != std::string::npos ? "(" + base + ")" : base;
        return wrapped + "^" + std::to_string(n);
    };
    if (z_rank > 0)
        parts.push_back(power("Z", z_rank));
    if (z2 > 0)
        parts.push_back(power("Z/2", z2));
    if (z4 > 0)
        parts.push_back(power("Z/4", z4));
    if (inf_z2)
        parts.push_back("inf(Z/2)");
    if (inf_z4)
        parts.push_back("inf(Z/4)");
    if (nk_d4 > 0)
        parts.push_back((nk_d4 == 1 ? "" : std::to_string(nk_d4) + "*")
                        + std::string("NK1(ZD4)"));
    if (nk_d6 > 0)
        parts.push_back((nk_d6 == 1 ? "" : std::to_string(nk_d6) + "*")
                        + std::string("NK1(ZD6)"));
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? " + " : "") + parts[i];
    return out;
}

KExpr KExpr::parse(const std::string& text)
{
    KExpr e;
    if (text == "0" || text.empty())
        return e;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(" + ", pos);
        std::string term = text.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? text.size() : next + 3;

        long mult = 1;
        if (auto star = term.find('*'); star != std::string::npos) {
            mult = std::stol(term.substr(0, star));
            term = term.substr(star + 1);
        }
        long exp = 1;
        if (auto caret = term.find('^'); caret != std::string::npos) {
            exp = std::stol(term.substr(caret + 1));
            term = term.substr(0, caret);
        }
        if (term.size() >= 2 && term.front() == '(' && term.back() == ')')
            term = term.substr(1, term.size() - 2);

        if (term == "Z")
            e.z_rank += exp * mult;
        else if (term == "Z/2")
            e.z2 += exp * mult;
        else if (term == "Z/4")
            e.z4 += exp * mult;
        else if (term == "inf(Z/2)")
            e.inf_z2 = true;
        else if (term == "inf(Z/4)")
            e.inf_z4 = true;
        else if (term == "NK1(ZD4)")
            e.nk_d4 += mult;
        else if (term == "NK1(ZD6)")
            e.nk_d6 += mult;
        else
            throw std::invalid_argument("KExpr::parse: bad term '" + term + "'");
    }
    return e;
}

} // namespace crystk

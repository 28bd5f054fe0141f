#include "jgpi/commpoly.hpp"

#include <sstream>

namespace jgpi {

Expo CommPoly::mul_expo(const Expo& a, const Expo& b) {
    Expo r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first)
            r.push_back(a[i++]);
        else if (a[i].first > b[j].first)
            r.push_back(b[j++]);
        else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    while (i < a.size()) r.push_back(a[i++]);
    while (j < b.size()) r.push_back(b[j++]);
    return r;
}

Rat CommPoly::eval(const std::vector<Rat>& values) const {
    Rat total(0);
    for (auto& [e, c] : t_) {
        Rat term = c;
        for (auto& [id, exp] : e) {
            const Rat& v = values.at(static_cast<size_t>(id));
            for (int k = 0; k < exp; ++k) term *= v;
        }
        total += term;
    }
    return total;
}

std::string CommPoly::str(const IndetTable& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : t_) {
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rat a = c.sign() < 0 ? -c : c;
        bool coeff = !(a == Rat(1)) || e.empty();
        if (coeff) os << a.str();
        bool leading = !coeff;
        for (auto& [id, exp] : e) {
            if (!leading) os << "*";
            os << names.name(id);
            if (exp > 1) os << "^" << exp;
            leading = false;
        }
        first = false;
    }
    return os.str();
}

}  // namespace jgpi

#include "extlim/group_expr.hpp"

#include <cctype>
#include <sstream>

#include "extlim/error.hpp"

namespace extlim {

namespace {

struct Term {
    bool torsion;
    Int value;  // exponent for Z^k, order for Z/m
};

[[noreturn]] void fail(const std::string& expr, std::size_t pos, const std::string& why) {
    throw InputError("parse error at position " + std::to_string(pos) + " in \"" + expr +
                     "\": " + why);
}

}  // namespace

FgAbGroup parse_group(const std::string& expr) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
    };
    auto read_int = [&](bool allow_zero) -> Int {
        std::size_t start = i;
        std::string digits;
        while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i])))
            digits += expr[i++];
        if (digits.empty()) fail(expr, start, "expected an integer");
        Int v(digits);
        if (v == 0 && !allow_zero) fail(expr, start, "integer must be positive");
        if (v > 1000000) fail(expr, start, "integer too large");
        return v;
    };

    std::size_t free_rank = 0;
    std::vector<Int> orders;
    while (true) {
        skip_ws();
        if (i >= expr.size() || expr[i] != 'Z') fail(expr, i, "expected 'Z'");
        ++i;
        if (i < expr.size() && expr[i] == '^') {
            ++i;
            Int k = read_int(true);
            free_rank += static_cast<std::size_t>(k);
        } else if (i < expr.size() && expr[i] == '/') {
            ++i;
            Int m = read_int(false);
            if (m > 1) orders.push_back(m);
        } else {
            free_rank += 1;
        }
        skip_ws();
        if (i >= expr.size()) break;
        if (expr[i] != '+') fail(expr, i, "expected '+' or end of expression");
        ++i;
    }
    std::size_t g = free_rank + orders.size();
    IntMatrix r(g, orders.size());
    for (std::size_t k = 0; k < orders.size(); ++k) r(free_rank + k, k) = orders[k];
    return FgAbGroup(g, std::move(r));
}

std::string format_group(const FgAbGroup& g) {
    if (g.is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (g.free_rank() == 1) {
        os << "Z";
        first = false;
    } else if (g.free_rank() > 1) {
        os << "Z^" << g.free_rank();
        first = false;
    }
    for (const Int& f : g.torsion()) {
        if (!first) os << "+";
        os << "Z/" << f;
        first = false;
    }
    return os.str();
}

std::string format_invariants(const FgAbGroup& g) {
    std::ostringstream os;
    os << "(" << g.free_rank() << ", [";
    for (std::size_t i = 0; i < g.torsion().size(); ++i)
        os << (i ? ", " : "") << g.torsion()[i];
    os << "])";
    return os.str();
}

std::string group_to_json(const FgAbGroup& g) {
    std::ostringstream os;
    os << "{\"free_rank\": " << g.free_rank() << ", \"torsion\": [";
    for (std::size_t i = 0; i < g.torsion().size(); ++i)
        os << (i ? ", " : "") << g.torsion()[i];
    os << "]}";
    return os.str();
}

}  // namespace extlim

#pragma once

// Named decomposition reports. A SumReport carries a computed total next to
// the individual terms of its proof-style decomposition and a residual that
// is always computed, never assumed zero.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "floorsums/prime_log_sum.hpp"
#include "floorsums/rational.hpp"

namespace floorsums {

struct TermValue {
    double value = 0.0;                                       // float view
    std::optional<Rational> exact;                            // exact value when available
    std::optional<std::pair<Rational, Rational>> enclosure;   // certified [lo, hi]

    static TermValue from_exact(Rational r) {
        TermValue t;
        t.value = rational_to_double(r);
        t.exact = std::move(r);
        return t;
    }
    static TermValue from_count(u64 n) { return from_exact(rational_from_u64(n)); }
    static TermValue from_interval(Rational lo, Rational hi) {
        TermValue t;
        t.value = rational_to_double(Rational((lo + hi) / 2));
        t.enclosure = std::make_pair(std::move(lo), std::move(hi));
        return t;
    }
    static TermValue from_double(double v) {
        TermValue t;
        t.value = v;
        return t;
    }
};

struct SumReport {
    TermValue total;
    std::vector<std::pair<std::string, TermValue>> terms;  // insertion order kept
    TermValue residual;
    bool residual_exact = false;  // true when residual.exact is authoritative

    void push(std::string name, TermValue v) { terms.emplace_back(std::move(name), std::move(v)); }

    const TermValue* find(std::string_view name) const {
        for (const auto& [n, v] : terms)
            if (n == name) return &v;
        return nullptr;
    }

    const TermValue& at(std::string_view name) const {
        const TermValue* t = find(name);
        if (!t) throw std::out_of_range("SumReport: no term named '" + std::string(name) + "'");
        return *t;
    }
};

}  // namespace floorsums

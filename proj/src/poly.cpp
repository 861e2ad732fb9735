#include "tmat/poly.hpp"

#include <algorithm>
#include <sstream>

#include "tmat/errors.hpp"

namespace tmat {

namespace {

int grade(const SparsePoly::Exps& e) { return e[0] + e[1] + e[2]; }

// graded lex: higher total degree first, then lexicographically larger first
bool graded_lex_greater(const SparsePoly::Exps& a, const SparsePoly::Exps& b) {
    if (grade(a) != grade(b)) return grade(a) > grade(b);
    return a > b;
}

} // namespace

SparsePoly::SparsePoly(const BigInt& c) {
    if (c != 0) terms_[{0, 0, 0}] = c;
}

SparsePoly::SparsePoly(long c) : SparsePoly(BigInt(c)) {}

SparsePoly SparsePoly::variable(const std::string& name, int exponent) {
    if (name.empty()) throw input_error("SparsePoly: empty variable name");
    SparsePoly p;
    if (exponent == 0) return SparsePoly(BigInt(1));
    p.vars_ = {name};
    p.terms_[{exponent, 0, 0}] = 1;
    return p;
}

bool SparsePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exps{0, 0, 0});
}

BigInt SparsePoly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void SparsePoly::insert(const Exps& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePoly::add_term(const std::vector<std::pair<std::string, int>>& monomial, const BigInt& c) {
    SparsePoly t(c);
    for (const auto& [name, exp] : monomial) t *= variable(name, exp);
    *this += t;
}

void SparsePoly::remap_vars(const std::vector<std::string>& new_vars) {
    if (new_vars.size() > 3) throw input_error("SparsePoly: more than 3 variables");
    std::array<int, 3> where{}; // old slot -> new slot
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        if (it == new_vars.end()) throw input_error("SparsePoly: variable lost in remap");
        where[i] = static_cast<int>(it - new_vars.begin());
    }
    std::map<Exps, BigInt> remapped;
    for (const auto& [e, c] : terms_) {
        Exps ne{0, 0, 0};
        for (std::size_t i = 0; i < vars_.size(); ++i) ne[static_cast<std::size_t>(where[i])] = e[i];
        remapped[ne] = c;
    }
    vars_ = new_vars;
    terms_ = std::move(remapped);
}

std::vector<std::string> SparsePoly::merged_vars(const SparsePoly& a, const SparsePoly& b) {
    std::vector<std::string> merged = a.vars_;
    for (const auto& v : b.vars_)
        if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
    std::sort(merged.begin(), merged.end());
    if (merged.size() > 3) throw input_error("SparsePoly: more than 3 variables");
    return merged;
}

void SparsePoly::drop_unused_vars() {
    std::array<bool, 3> used{false, false, false};
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < 3; ++i)
            if (e[i] != 0) used[static_cast<std::size_t>(i)] = true;
    std::vector<std::string> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) keep.push_back(vars_[i]);
    if (keep.size() == vars_.size()) return;
    // rebuild with the smaller variable list
    std::map<Exps, BigInt> rebuilt;
    for (const auto& [e, c] : terms_) {
        Exps ne{0, 0, 0};
        int j = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) ne[static_cast<std::size_t>(j++)] = e[i];
        rebuilt[ne] = c;
    }
    vars_ = std::move(keep);
    terms_ = std::move(rebuilt);
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    const auto merged = merged_vars(*this, o);
    remap_vars(merged);
    SparsePoly rhs = o;
    rhs.remap_vars(merged);
    for (const auto& [e, c] : rhs.terms_) insert(e, c);
    drop_unused_vars();
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) { return *this += -o; }

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) {
    const auto merged = merged_vars(*this, o);
    remap_vars(merged);
    SparsePoly rhs = o;
    rhs.remap_vars(merged);
    SparsePoly out;
    out.vars_ = merged;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_)
            out.insert({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    out.drop_unused_vars();
    *this = std::move(out);
    return *this;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    SparsePoly a = *this, b = o;
    a.drop_unused_vars();
    b.drop_unused_vars();
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

SparsePoly SparsePoly::pow(int e) const {
    if (e == 0) return SparsePoly(BigInt(1));
    if (e < 0) {
        if (terms_.size() != 1) throw input_error("SparsePoly::pow: negative power of a non-monomial");
        const auto& [exps, c] = *terms_.begin();
        if (c != 1 && c != -1) throw input_error("SparsePoly::pow: negative power needs unit coefficient");
        SparsePoly r;
        r.vars_ = vars_;
        // c is 1 or -1, so c^e only depends on the parity of e
        r.terms_[{exps[0] * e, exps[1] * e, exps[2] * e}] = (c == -1 && e % 2 != 0) ? BigInt(-1) : BigInt(1);
        r.drop_unused_vars();
        return r;
    }
    SparsePoly base = *this, acc(BigInt(1));
    int k = e;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

SparsePoly SparsePoly::substitute(const std::string& var, const SparsePoly& value) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return *this;
    const std::size_t slot = static_cast<std::size_t>(it - vars_.begin());
    SparsePoly out;
    for (const auto& [e, c] : terms_) {
        if (e[slot] < 0) throw input_error("SparsePoly::substitute: negative exponent of substituted variable");
        SparsePoly term(c);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (i == slot) continue;
            if (e[i] != 0) term *= variable(vars_[i], e[i]);
        }
        term *= value.pow(e[slot]);
        out += term;
    }
    return out;
}

BigInt SparsePoly::eval(const std::map<std::string, BigInt>& point) const {
    BigInt total = 0;
    for (const auto& [e, c] : terms_) {
        BigInt term = c;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0) throw input_error("SparsePoly::eval: negative exponent");
            auto it = point.find(vars_[i]);
            if (it == point.end()) throw input_error("SparsePoly::eval: unassigned variable " + vars_[i]);
            BigInt p = 1;
            for (int k = 0; k < e[i]; ++k) p *= it->second;
            term *= p;
        }
        total += term;
    }
    return total;
}

std::string SparsePoly::pretty() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exps, BigInt>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return graded_lex_greater(a.first, b.first); });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] == 1)
                factors.push_back(vars_[i]);
            else
                factors.push_back(vars_[i] + "^" + std::to_string(e[i]));
        }
        if (factors.empty()) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) out << "*";
                out << factors[i];
            }
        }
    }
    return out.str();
}

nlohmann::json SparsePoly::to_json() const {
    nlohmann::json j;
    j["vars"] = vars_;
    std::vector<std::pair<Exps, BigInt>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return graded_lex_greater(b.first, a.first); });
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : ordered) {
        nlohmann::json exps = nlohmann::json::array();
        for (std::size_t i = 0; i < vars_.size(); ++i) exps.push_back(e[i]);
        terms.push_back(nlohmann::json::array({c.str(), exps}));
    }
    j["terms"] = terms;
    return j;
}

SparsePoly SparsePoly::from_json(const nlohmann::json& j) {
    SparsePoly p;
    const auto vars = j.at("vars").get<std::vector<std::string>>();
    if (vars.size() > 3) throw input_error("polynomial JSON: more than 3 variables");
    for (const auto& entry : j.at("terms")) {
        if (!entry.is_array() || entry.size() != 2) throw input_error("polynomial JSON: bad term");
        BigInt c(entry[0].get<std::string>());
        const auto exps = entry[1].get<std::vector<int>>();
        if (exps.size() != vars.size()) throw input_error("polynomial JSON: exponent arity mismatch");
        std::vector<std::pair<std::string, int>> monomial;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (exps[i] != 0) monomial.emplace_back(vars[i], exps[i]);
        p.add_term(monomial, c);
    }
    return p;
}

} // namespace tmat

#include "lgd/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <regex>
#include <string>

#include "lgd/arith.hpp"

namespace lgd {

ModMat reduce_matrix(const ModMat& m, std::int64_t modulus)
{
    return m.unaryExpr([modulus](std::int64_t v) { return ((v % modulus) + modulus) % modulus; });
}

ModMat multiply_mod(const ModMat& a, const ModMat& b, std::int64_t modulus)
{
    ModMat out = ModMat::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            std::int64_t s = 0;
            for (Eigen::Index k = 0; k < a.cols(); ++k) {
                s = (s + mul_mod(a(i, k), b(k, j), modulus)) % modulus;
            }
            out(i, j) = s;
        }
    }
    return out;
}

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<int>> table) : table_(std::move(table))
{
    const int g = order();
    if (g == 0) {
        throw DomainError("empty group table");
    }
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != g) {
            throw DomainError("group table is not square");
        }
        for (int v : row) {
            if (v < 0 || v >= g) {
                throw DomainError("group table entry out of range");
            }
        }
    }
    identity_ = -1;
    for (int e = 0; e < g && identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < g && ok; ++a) {
            ok = table_[e][a] == a && table_[a][e] == a;
        }
        if (ok) {
            identity_ = e;
        }
    }
    if (identity_ < 0) {
        throw DomainError("group table has no identity");
    }
    inverse_.assign(g, -1);
    for (int a = 0; a < g; ++a) {
        for (int b = 0; b < g; ++b) {
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] < 0) {
            throw DomainError("group table element without inverse");
        }
    }
    auto assoc = [&](int a, int b, int c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
            throw DomainError("group table is not associative");
        }
    };
    if (g <= 64) {
        for (int a = 0; a < g; ++a) {
            for (int b = 0; b < g; ++b) {
                for (int c = 0; c < g; ++c) {
                    assoc(a, b, c);
                }
            }
        }
    } else {
        std::uint64_t s = 0x9e3779b97f4a7c15ULL;
        auto next = [&]() {
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            return static_cast<int>((s >> 33U) % static_cast<std::uint64_t>(g));
        };
        for (int i = 0; i < 20000; ++i) {
            const int a = next();
            const int b = next();
            assoc(a, b, next());
        }
    }
}

FiniteGroupTable FiniteGroupTable::trivial() { return FiniteGroupTable(std::vector<std::vector<int>>{{0}}); }

FiniteGroupTable FiniteGroupTable::cyclic(int m)
{
    if (m < 1) {
        throw DomainError("cyclic group order must be positive");
    }
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            t[a][b] = (a + b) % m;
        }
    }
    return FiniteGroupTable(std::move(t));
}

int FiniteGroupTable::power(int a, std::int64_t k) const
{
    if (k < 0) {
        a = inverse_[a];
        k = -k;
    }
    int acc = identity_;
    while (k > 0) {
        if (k & 1) {
            acc = table_[acc][a];
        }
        a = table_[a][a];
        k >>= 1;
    }
    return acc;
}

int FiniteGroupTable::element_order(int a) const
{
    int k = 1;
    for (int x = a; x != identity_; x = table_[x][a]) {
        ++k;
    }
    return k;
}

std::vector<int> FiniteGroupTable::generated(const std::vector<int>& gens) const
{
    std::vector<char> seen(table_.size(), 0);
    std::vector<int> out{identity_};
    seen[identity_] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (int s : gens) {
            const int x = table_[out[i]][s];
            if (!seen[x]) {
                seen[x] = 1;
                out.push_back(x);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> FiniteGroupTable::generators_of(const std::vector<int>& elements) const
{
    std::vector<int> gens;
    std::vector<int> current{identity_};
    // larger orders first gives short generating sets
    std::vector<int> order_by = elements;
    std::stable_sort(order_by.begin(), order_by.end(),
                     [&](int a, int b) { return element_order(a) > element_order(b); });
    for (int x : order_by) {
        if (!std::binary_search(current.begin(), current.end(), x)) {
            gens.push_back(x);
            current = generated(gens);
        }
    }
    return gens;
}

std::vector<int> FiniteGroupTable::generators() const
{
    std::vector<int> all(table_.size());
    std::iota(all.begin(), all.end(), 0);
    return generators_of(all);
}

MatrixGroup matrix_group(const std::vector<ModMat>& generators, std::int64_t modulus, std::size_t cap)
{
    if (modulus < 2) {
        throw DomainError("matrix modulus must be at least 2");
    }
    if (generators.empty()) {
        throw DomainError("no generators");
    }
    const Eigen::Index r = generators.front().rows();
    std::vector<ModMat> gens;
    for (const auto& m : generators) {
        if (m.rows() != r || m.cols() != r || r == 0) {
            throw DomainError("generators must be square matrices of one size");
        }
        gens.push_back(reduce_matrix(m, modulus));
    }
    auto key = [](const ModMat& m) { return std::vector<std::int64_t>(m.data(), m.data() + m.size()); };
    std::map<std::vector<std::int64_t>, int> index;
    std::vector<ModMat> elems{ModMat::Identity(r, r)};
    index.emplace(key(elems.front()), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& s : gens) {
            ModMat x = multiply_mod(elems[i], s, modulus);
            if (index.emplace(key(x), static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(x));
                if (elems.size() > cap) {
                    throw LimitExceeded("matrix group exceeds " + std::to_string(cap) + " elements");
                }
            }
        }
    }
    // a finite monoid closed under right multiplication is a group only if every generator is a unit
    const int g = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(g, std::vector<int>(g));
    for (int a = 0; a < g; ++a) {
        for (int b = 0; b < g; ++b) {
            const auto it = index.find(key(multiply_mod(elems[a], elems[b], modulus)));
            if (it == index.end()) {
                throw DomainError("matrices do not generate a group");
            }
            table[a][b] = it->second;
        }
    }
    for (int a = 0; a < g; ++a) {
        if (std::find(table[a].begin(), table[a].end(), 0) == table[a].end()) {
            throw DomainError("generator matrix is not invertible");
        }
    }
    return {FiniteGroupTable(std::move(table)), std::move(elems), modulus};
}

std::vector<ModMat> parse_matrices(std::string_view text)
{
    std::vector<ModMat> out;
    std::string s(text);
    std::size_t start = 0;
    const std::regex row_re(R"(\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\])");
    const std::regex num_re(R"(-?\d+)");
    while (start <= s.size()) {
        const std::size_t end = std::min(s.find(';', start), s.size());
        const std::string part = s.substr(start, end - start);
        start = end + 1;
        std::string trimmed = std::regex_replace(part, std::regex(R"(\s)"), "");
        if (trimmed.size() < 4 || trimmed.front() != '[' || trimmed.back() != ']') {
            throw ParseError("matrix must look like [[a,b],[c,d]]: '" + part + "'");
        }
        const std::string inner = trimmed.substr(1, trimmed.size() - 2);
        std::vector<std::vector<std::int64_t>> rows;
        std::string rest = inner;
        std::smatch m;
        while (std::regex_search(rest, m, row_re)) {
            if (m.position(0) != 0) {
                throw ParseError("unexpected text in matrix: '" + part + "'");
            }
            std::vector<std::int64_t> row;
            const std::string body = m[1];
            for (auto it = std::sregex_iterator(body.begin(), body.end(), num_re); it != std::sregex_iterator();
                 ++it) {
                row.push_back(std::stoll(it->str()));
            }
            rows.push_back(std::move(row));
            rest = m.suffix();
            if (!rest.empty()) {
                if (rest.front() != ',') {
                    throw ParseError("rows must be separated by commas: '" + part + "'");
                }
                rest.erase(0, 1);
            }
        }
        if (!rest.empty() || rows.empty()) {
            throw ParseError("malformed matrix: '" + part + "'");
        }
        const auto n = static_cast<Eigen::Index>(rows.size());
        ModMat mat(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (static_cast<Eigen::Index>(rows[i].size()) != n) {
                throw ParseError("matrix must be square: '" + part + "'");
            }
            for (Eigen::Index j = 0; j < n; ++j) {
                mat(i, j) = rows[i][j];
            }
        }
        out.push_back(std::move(mat));
        if (end == s.size()) {
            break;
        }
    }
    return out;
}

namespace {

bool is_power_of(std::int64_t v, std::int64_t p)
{
    while (v % p == 0) {
        v /= p;
    }
    return v == 1;
}

} // namespace

std::vector<Subgroup> cyclic_subgroups(const FiniteGroupTable& g, bool p_only, std::int64_t p)
{
    if (p_only && (p < 2 || !is_prime(p))) {
        throw DomainError("p-only subgroups need a prime p");
    }
    std::map<std::vector<int>, int> found;
    for (int a = 0; a < g.order(); ++a) {
        if (p_only && !is_power_of(g.element_order(a), p)) {
            continue;
        }
        found.emplace(g.generated({a}), a);
    }
    std::vector<Subgroup> out;
    for (auto& [elements, gen] : found) {
        out.push_back({elements, gen});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Subgroup& x, const Subgroup& y) { return x.elements.size() < y.elements.size(); });
    return out;
}

std::vector<int> sylow_subgroup(const FiniteGroupTable& g, std::int64_t p)
{
    if (p < 2 || !is_prime(p)) {
        throw DomainError("Sylow subgroup needs a prime p");
    }
    std::int64_t target = 1;
    for (std::int64_t m = g.order(); m % p == 0; m /= p) {
        target *= p;
    }
    std::vector<int> sub{g.identity()};
    std::vector<int> gens;
    while (static_cast<std::int64_t>(sub.size()) < target) {
        auto in_sub = [&](int x) { return std::binary_search(sub.begin(), sub.end(), x); };
        int pick = -1;
        for (int x = 0; x < g.order() && pick < 0; ++x) {
            if (in_sub(x) || !in_sub(g.power(x, p))) {
                continue;
            }
            // x normalizes sub
            bool normal = true;
            for (int h : sub) {
                if (!in_sub(g.mul(g.mul(x, h), g.inverse(x)))) {
                    normal = false;
                    break;
                }
            }
            if (normal) {
                pick = x;
            }
        }
        if (pick < 0) {
            throw std::logic_error("no p-element in the normalizer of a non-Sylow p-subgroup");
        }
        gens.push_back(pick);
        sub = g.generated(gens);
    }
    return sub;
}

bool sylow_is_cyclic(const FiniteGroupTable& g, std::int64_t p)
{
    const auto sub = sylow_subgroup(g, p);
    return std::any_of(sub.begin(), sub.end(),
                       [&](int x) { return g.element_order(x) == static_cast<int>(sub.size()); });
}

} // namespace lgd

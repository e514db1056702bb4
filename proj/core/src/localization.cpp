#include "mirrorgw/localization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mgw {

int DecoratedTree::total_degree() const { return std::accumulate(degree.begin(), degree.end(), 0); }

namespace {

struct Adjacent {
    int vertex;
    int degree;
};

std::vector<std::vector<Adjacent>> adjacency(const DecoratedTree& t) {
    std::vector<std::vector<Adjacent>> adj(static_cast<size_t>(t.vertex_count()));
    for (size_t e = 0; e < t.edges.size(); ++e) {
        auto [u, v] = t.edges[e];
        adj[static_cast<size_t>(u)].push_back({v, t.degree[e]});
        adj[static_cast<size_t>(v)].push_back({u, t.degree[e]});
    }
    return adj;
}

std::vector<int> marks_at(const DecoratedTree& t, int v) {
    std::vector<int> out;
    for (size_t j = 0; j < t.marks.size(); ++j)
        if (t.marks[j] == v) out.push_back(static_cast<int>(j));
    return out;
}

}  // namespace

std::string DecoratedTree::canonical() const {
    if (marks.empty()) throw std::invalid_argument("canonical form needs a marked point");
    auto adj = adjacency(*this);
    std::function<std::string(int, int)> encode = [&](int v, int parent) {
        std::vector<std::string> children;
        for (const auto& nb : adj[static_cast<size_t>(v)])
            if (nb.vertex != parent) children.push_back(std::to_string(nb.degree) + ":" + encode(nb.vertex, v));
        std::sort(children.begin(), children.end());
        std::string s = "(" + std::to_string(label[static_cast<size_t>(v)]);
        for (int j : marks_at(*this, v)) s += "m" + std::to_string(j);
        for (const auto& c : children) s += c;
        return s + ")";
    };
    return encode(marks.front(), -1);
}

std::string DecoratedTree::describe() const {
    std::string s = "labels";
    for (int l : label) s += " " + std::to_string(l + 1);
    s += "; edges";
    for (size_t e = 0; e < edges.size(); ++e)
        s += " " + std::to_string(edges[e].first) + "-" + std::to_string(edges[e].second) + "[" +
             std::to_string(degree[e]) + "]";
    s += "; marks";
    for (int v : marks) s += " " + std::to_string(v);
    return s + "; |Aut| = " + std::to_string(automorphisms);
}

int count_automorphisms(const DecoratedTree& t) {
    const int V = t.vertex_count();
    std::map<std::pair<int, int>, int> edge_deg;
    for (size_t e = 0; e < t.edges.size(); ++e) {
        auto [u, v] = t.edges[e];
        edge_deg[{std::min(u, v), std::max(u, v)}] = t.degree[e];
    }
    std::vector<int> perm(static_cast<size_t>(V));
    std::iota(perm.begin(), perm.end(), 0);
    int count = 0;
    do {
        bool ok = true;
        for (int v = 0; v < V && ok; ++v) ok = t.label[static_cast<size_t>(perm[static_cast<size_t>(v)])] == t.label[static_cast<size_t>(v)];
        for (int m : t.marks)
            if (ok) ok = perm[static_cast<size_t>(m)] == m;
        for (const auto& [key, deg] : edge_deg) {
            if (!ok) break;
            int a = perm[static_cast<size_t>(key.first)], b = perm[static_cast<size_t>(key.second)];
            auto it = edge_deg.find({std::min(a, b), std::max(a, b)});
            ok = it != edge_deg.end() && it->second == deg;
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::vector<DecoratedTree> enumerate_trees(int n, int d, int m, int max_degree) {
    if (d < 1) throw std::invalid_argument("trees need degree >= 1");
    if (d > max_degree) throw std::invalid_argument("degree exceeds the enumeration guard");
    if (m < 1) throw std::invalid_argument("trees need at least one marked point");
    if (n < 2) throw std::invalid_argument("trees need n >= 2");
    std::map<std::string, DecoratedTree> classes;

    for (int ne = 1; ne <= d; ++ne) {
        const int V = ne + 1;
        std::vector<int> parent(static_cast<size_t>(V), 0);
        // odometer over parent[v] in [0, v)
        for (;;) {
            DecoratedTree shape;
            for (int v = 1; v < V; ++v) shape.edges.push_back({parent[static_cast<size_t>(v)], v});
            std::vector<int> deg(static_cast<size_t>(ne), 1);
            for (;;) {
                if (std::accumulate(deg.begin(), deg.end(), 0) == d) {
                    std::vector<int> lab(static_cast<size_t>(V), 0);
                    for (;;) {
                        bool proper = true;
                        for (const auto& [u, v] : shape.edges)
                            if (lab[static_cast<size_t>(u)] == lab[static_cast<size_t>(v)]) proper = false;
                        if (proper) {
                            std::vector<int> mk(static_cast<size_t>(m), 0);
                            for (;;) {
                                DecoratedTree t{lab, shape.edges, deg, mk, 1};
                                std::string key = t.canonical();
                                if (!classes.count(key)) {
                                    t.automorphisms = count_automorphisms(t);
                                    classes.emplace(std::move(key), std::move(t));
                                }
                                int k = 0;
                                while (k < m && ++mk[static_cast<size_t>(k)] == V) mk[static_cast<size_t>(k++)] = 0;
                                if (k == m) break;
                            }
                        }
                        int k = 0;
                        while (k < V && ++lab[static_cast<size_t>(k)] == n) lab[static_cast<size_t>(k++)] = 0;
                        if (k == V) break;
                    }
                }
                int k = 0;
                while (k < ne && ++deg[static_cast<size_t>(k)] > d) deg[static_cast<size_t>(k++)] = 1;
                if (k == ne) break;
            }
            int v = 1;
            while (v < V && ++parent[static_cast<size_t>(v)] == v) parent[static_cast<size_t>(v++)] = 0;
            if (v >= V) break;
        }
    }
    std::vector<DecoratedTree> out;
    for (auto& [key, t] : classes) out.push_back(std::move(t));
    return out;
}

Rational psi_integral(const std::vector<int>& exponents) {
    const int k = static_cast<int>(exponents.size());
    if (k < 3) throw std::invalid_argument("psi integrals need at least three points");
    int sum = 0;
    for (int e : exponents) {
        if (e < 0) throw std::invalid_argument("negative psi exponent");
        sum += e;
    }
    if (sum != k - 3) return Rational(0);
    Rational r = Rational::factorial(static_cast<unsigned>(k - 3));
    for (int e : exponents) r /= Rational::factorial(static_cast<unsigned>(e));
    return r;
}

Rational psi_integral_by_string_equation(const std::vector<int>& exponents) {
    const int k = static_cast<int>(exponents.size());
    if (k < 3) throw std::invalid_argument("psi integrals need at least three points");
    int sum = 0;
    for (int e : exponents) {
        if (e < 0) throw std::invalid_argument("negative psi exponent");
        sum += e;
    }
    if (sum != k - 3) return Rational(0);
    if (k == 3) return Rational(1);
    // <tau_0 prod tau_{a_j}> = sum_j <tau_{a_j - 1} prod_{l != j} tau_{a_l}>
    auto zero = std::find(exponents.begin(), exponents.end(), 0);
    std::vector<int> rest(exponents.begin(), zero);
    rest.insert(rest.end(), zero + 1, exponents.end());
    Rational total(0);
    for (size_t j = 0; j < rest.size(); ++j) {
        if (rest[j] == 0) continue;
        std::vector<int> lowered = rest;
        --lowered[j];
        total += psi_integral_by_string_equation(lowered);
    }
    return total;
}

namespace {

enum class SlotKind { flag, propagator, power };

struct Slot {
    SlotKind kind;
    Rational omega;  // flag weight
    int beta = 0;    // power exponent
};

// integral over the vertex moduli space of prod_F 1/(omega_F - psi_F) times the mark factors
RatFn vertex_integral(const std::vector<Slot>& slots) {
    const int k = static_cast<int>(slots.size());
    RatFn total;
    std::vector<int> e(static_cast<size_t>(k), 0);
    for (;;) {
        int sum = std::accumulate(e.begin(), e.end(), 0);
        if (sum == k - 3) {
            RatFn term(psi_integral(e));
            for (int s = 0; s < k && !term.is_zero(); ++s) {
                const Slot& sl = slots[static_cast<size_t>(s)];
                int ex = e[static_cast<size_t>(s)];
                switch (sl.kind) {
                    case SlotKind::flag: term = term * RatFn(sl.omega.pow(-(ex + 1))); break;
                    case SlotKind::propagator: term = term * RatFn::monomial(-(ex + 1), Rational(1)); break;
                    case SlotKind::power:
                        if (ex != sl.beta) term = RatFn();
                        break;
                }
            }
            total += term;
        }
        int idx = 0;
        while (idx < k && ++e[static_cast<size_t>(idx)] > k - 3) e[static_cast<size_t>(idx++)] = 0;
        if (idx == k) break;
    }
    return total;
}

}  // namespace

RatFn graph_contribution(const DecoratedTree& t, const std::vector<Insertion>& ins, TwistMode twist,
                         const AlphaSpec& spec) {
    if (ins.size() != t.marks.size()) throw std::invalid_argument("one insertion per marked point required");
    int propagators = 0;
    for (const auto& x : ins) propagators += x.descendant == Insertion::Descendant::propagator;
    if (propagators > 1) throw std::invalid_argument("at most one propagator insertion is supported");
    const int n = spec.n();
    const int a = spec.a();
    const auto& alpha = spec.alpha();
    auto al = [&](int i) -> const Rational& { return alpha[static_cast<size_t>(i)]; };

    RatFn res(Rational(1));
    for (size_t e = 0; e < t.edges.size(); ++e) {
        int i = t.label[static_cast<size_t>(t.edges[e].first)];
        int j = t.label[static_cast<size_t>(t.edges[e].second)];
        int delta = t.degree[e];
        Rational omega = (al(j) - al(i)) / Rational(delta);
        Rational normal(delta % 2 ? -1 : 1);
        for (int r = 1; r <= delta; ++r) normal *= (Rational(r) * omega) * (Rational(r) * omega);
        for (int r = 0; r <= delta; ++r)
            for (int k = 0; k < n; ++k)
                if (k != i && k != j) normal *= al(i) - al(k) + Rational(r) * omega;
        Rational bundle(1);
        for (int r = 0; r <= a * delta; ++r) bundle *= Rational(a) * al(i) + Rational(r) * omega;
        res = res * RatFn(bundle / normal / Rational(delta));
    }

    auto adj = adjacency(t);
    for (int v = 0; v < t.vertex_count(); ++v) {
        int i = t.label[static_cast<size_t>(v)];
        const auto& nbs = adj[static_cast<size_t>(v)];
        int ve = static_cast<int>(nbs.size());
        std::vector<int> vm = marks_at(t, v);
        res = res * RatFn((spec.tangent_product(i) / (Rational(a) * al(i))).pow(ve - 1));
        std::vector<Rational> flags;
        for (const auto& nb : nbs) flags.push_back((al(i) - al(t.label[static_cast<size_t>(nb.vertex)])) / Rational(nb.degree));
        int total = ve + static_cast<int>(vm.size());
        if (total == 1) {
            res = res * RatFn(flags[0]);
        } else if (total == 2 && ve == 2) {
            res = res * RatFn((flags[0] + flags[1]).inverse());
        } else if (total == 2 && ve == 1) {
            const Insertion& x = ins[static_cast<size_t>(vm[0])];
            if (x.descendant == Insertion::Descendant::propagator)
                res = res / RatFn(QPoly::linear(flags[0], Rational(1)));
            else
                res = res * RatFn((-flags[0]).pow(x.beta));
        } else if (total >= 3) {
            std::vector<Slot> slots;
            for (const auto& f : flags) slots.push_back({SlotKind::flag, f, 0});
            for (int j : vm) {
                const Insertion& x = ins[static_cast<size_t>(j)];
                if (x.descendant == Insertion::Descendant::propagator)
                    slots.push_back({SlotKind::propagator, Rational(0), 0});
                else
                    slots.push_back({SlotKind::power, Rational(0), x.beta});
            }
            res = res * vertex_integral(slots);
        } else {
            throw std::invalid_argument("unsupported vertex valence pattern");
        }
    }

    for (size_t j = 0; j < ins.size(); ++j) {
        int mu = t.label[static_cast<size_t>(t.marks[j])];
        const Insertion& x = ins[j];
        if (x.cls == Insertion::Class::fixed_point) {
            if (x.index != mu) return RatFn();
            res = res * RatFn(spec.tangent_product(mu));
        } else {
            res = res * RatFn(al(mu).pow(x.index));
        }
    }
    if (twist.kind != TwistMode::Kind::full) {
        if (twist.mark < 0 || twist.mark >= static_cast<int>(t.marks.size()))
            throw std::invalid_argument("twist names a missing marked point");
        int mu = t.label[static_cast<size_t>(t.marks[static_cast<size_t>(twist.mark)])];
        res = res * RatFn((Rational(a) * al(mu)).inverse());
    }
    return res * RatFn(Rational(1, t.automorphisms));
}

RatFn oracle_zp(const AlphaSpec& spec, int p, int i, int d) {
    if (p < -1 || p >= spec.n()) throw std::out_of_range("p must lie in [-1, n-1]");
    if (d == 0) return RatFn(spec[i].pow(p + 1));
    std::vector<Insertion> ins = {Insertion::fixed_point(i, Insertion::Descendant::propagator),
                                  Insertion::x_power(p + 1)};
    RatFn total;
    for (const auto& t : enumerate_trees(spec.n(), d, 2))
        if (t.label[static_cast<size_t>(t.marks[0])] == i)
            total += graph_contribution(t, ins, TwistMode::V0_double_prime(1), spec);
    return total;
}

FixedPointSeries oracle_zp_series(const AlphaSpec& spec, int p, int max_degree) {
    FixedPointSeries out(spec.n(), max_degree, Var::u);
    std::vector<std::vector<DecoratedTree>> trees;
    for (int d = 1; d <= max_degree; ++d) trees.push_back(enumerate_trees(spec.n(), d, 2));
    std::vector<Insertion> base = {Insertion::fixed_point(0, Insertion::Descendant::propagator),
                                   Insertion::x_power(p + 1)};
    for (int i = 0; i < spec.n(); ++i) {
        out.coeff(i, 0) = RatFn(spec[i].pow(p + 1));
        std::vector<Insertion> ins = base;
        ins[0].index = i;
        for (int d = 1; d <= max_degree; ++d)
            for (const auto& t : trees[static_cast<size_t>(d - 1)])
                if (t.label[static_cast<size_t>(t.marks[0])] == i)
                    out.coeff(i, d) += graph_contribution(t, ins, TwistMode::V0_double_prime(1), spec);
    }
    return out;
}

Rational oracle_two_point(const AlphaSpec& spec, int d, int a1, int b1, int a2, int b2) {
    std::vector<Insertion> ins = {Insertion::x_power(b1, Insertion::Descendant::power, a1),
                                  Insertion::x_power(b2, Insertion::Descendant::power, a2)};
    RatFn total;
    for (const auto& t : enumerate_trees(spec.n(), d, 2)) total += graph_contribution(t, ins, TwistMode::V0(), spec);
    if (!total.is_constant()) throw std::logic_error("two-point localization sum depends on h");
    return total.constant_value();
}

}  // namespace mgw

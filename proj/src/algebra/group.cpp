// Copyright 2026 The QRW Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrw/algebra/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qrw/error.hpp"

namespace qrw::algebra {

GroupTable GroupTable::unchecked(std::vector<std::vector<Element>> add, Element zero) {
    if (add.empty() || add.size() > kMaxGroupOrder) {
        throw ArgumentError("group order must lie in 1..512, got " + std::to_string(add.size()));
    }
    for (const auto &row : add) {
        if (row.size() != add.size()) {
            throw ArgumentError("addition table must be square");
        }
    }
    if (zero >= add.size()) {
        throw ArgumentError("zero element out of range");
    }
    return GroupTable(std::move(add), zero);
}

GroupTable GroupTable::from_table(std::vector<std::vector<Element>> add, Element zero) {
    GroupTable g = unchecked(std::move(add), zero);
    if (auto violation = g.axiom_violation()) {
        throw StructuralError("not an abelian group: " + *violation);
    }
    return g;
}

GroupTable GroupTable::cyclic(std::size_t n) {
    if (n == 0 || n > kMaxGroupOrder) {
        throw ArgumentError("group order must lie in 1..512, got " + std::to_string(n));
    }
    std::vector<std::vector<Element>> add(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            add[a][b] = (a + b) % n;
        }
    }
    return GroupTable(std::move(add), 0);
}

GroupTable GroupTable::direct_product(const GroupTable &a, const GroupTable &b) {
    const std::size_t n = a.order() * b.order();
    if (n > kMaxGroupOrder) {
        throw ArgumentError("direct product order " + std::to_string(n) + " exceeds 512");
    }
    std::vector<std::vector<Element>> add(n, std::vector<Element>(n));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const Element i = a.add(x / b.order(), y / b.order());
            const Element j = b.add(x % b.order(), y % b.order());
            add[x][y] = i * b.order() + j;
        }
    }
    return GroupTable(std::move(add), a.zero() * b.order() + b.zero());
}

Element GroupTable::negate(Element a) const {
    for (Element b = 0; b < order(); ++b) {
        if (add(a, b) == zero_) {
            return b;
        }
    }
    throw StructuralError("element " + std::to_string(a) + " has no inverse");
}

Element GroupTable::multiple(std::size_t n, Element a) const {
    Element acc = zero_;
    for (std::size_t i = 0; i < n; ++i) {
        acc = add(acc, a);
    }
    return acc;
}

std::optional<std::string> GroupTable::axiom_violation() const {
    const std::size_t n = order();
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            if (add_[a][b] >= n) {
                return "closure fails for " + std::to_string(a) + " + " + std::to_string(b);
            }
        }
    }
    for (Element a = 0; a < n; ++a) {
        if (add_[zero_][a] != a || add_[a][zero_] != a) {
            return "identity fails for " + std::to_string(a);
        }
        bool inverse = false;
        for (Element b = 0; b < n; ++b) {
            if (add_[a][b] != add_[b][a]) {
                return "commutativity fails for " + std::to_string(a) + ", " + std::to_string(b);
            }
            inverse = inverse || add_[a][b] == zero_;
        }
        if (!inverse) {
            return "inverse missing for " + std::to_string(a);
        }
    }
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            const Element ab = add_[a][b];
            for (Element c = 0; c < n; ++c) {
                if (add_[ab][c] != add_[a][add_[b][c]]) {
                    return "associativity fails for " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                           std::to_string(c);
                }
            }
        }
    }
    return std::nullopt;
}

bool Subgroup::contains(Element e) const { return std::binary_search(members.begin(), members.end(), e); }

Subgroup make_subgroup(const GroupTable &g, std::vector<Element> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup h{std::move(members)};
    if (h.members.empty() || h.members.back() >= g.order()) {
        throw StructuralError("subgroup members must be elements of the group");
    }
    if (!h.contains(g.zero())) {
        throw StructuralError("subgroup must contain zero");
    }
    for (Element a : h.members) {
        if (!h.contains(g.negate(a))) {
            throw StructuralError("subgroup not closed under negation at " + std::to_string(a));
        }
        for (Element b : h.members) {
            if (!h.contains(g.add(a, b))) {
                throw StructuralError("subgroup not closed under addition at " + std::to_string(a) + " + " +
                                      std::to_string(b));
            }
        }
    }
    return h;
}

Subgroup generated_subgroup(const GroupTable &g, const std::vector<Element> &generators) {
    std::vector<bool> in(g.order(), false);
    std::vector<Element> members{g.zero()};
    in[g.zero()] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (Element gen : generators) {
            for (Element step : {g.add(members[i], gen), g.add(members[i], g.negate(gen))}) {
                if (!in[step]) {
                    in[step] = true;
                    members.push_back(step);
                }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return Subgroup{std::move(members)};
}

Subgroup cyclic_subgroup(const GroupTable &g, Element a) { return generated_subgroup(g, {a}); }

std::vector<Subgroup> all_subgroups(const GroupTable &g) {
    std::set<std::vector<Element>> seen;
    std::vector<Subgroup> frontier{Subgroup{{g.zero()}}};
    seen.insert(frontier.front().members);
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (Element a = 0; a < g.order(); ++a) {
            if (frontier[i].contains(a)) {
                continue;
            }
            std::vector<Element> gens = frontier[i].members;
            gens.push_back(a);
            Subgroup next = generated_subgroup(g, gens);
            if (seen.insert(next.members).second) {
                frontier.push_back(std::move(next));
            }
        }
    }
    std::sort(frontier.begin(), frontier.end(), [](const Subgroup &x, const Subgroup &y) {
        return x.order() != y.order() ? x.order() < y.order() : x.members < y.members;
    });
    return frontier;
}

Quotient quotient(const GroupTable &g, const Subgroup &h) {
    if (h.order() == 0 || g.order() % h.order() != 0) {
        throw StructuralError("subgroup order " + std::to_string(h.order()) + " does not divide group order " +
                              std::to_string(g.order()));
    }
    const std::size_t count = g.order() / h.order();
    std::vector<Element> coset_of(g.order(), g.order());
    std::vector<Element> representative;
    for (Element x = 0; x < g.order(); ++x) {
        if (coset_of[x] != g.order()) {
            continue;
        }
        const Element label = representative.size();
        representative.push_back(x);
        for (Element m : h.members) {
            const Element y = g.add(x, m);
            if (coset_of[y] != g.order() && coset_of[y] != label) {
                throw StructuralError("cosets of the subgroup overlap");
            }
            coset_of[y] = label;
        }
    }
    if (representative.size() != count) {
        throw StructuralError("cosets do not partition the group into " + std::to_string(count) + " classes");
    }
    std::vector<std::vector<Element>> add(count, std::vector<Element>(count));
    for (Element a = 0; a < count; ++a) {
        for (Element b = 0; b < count; ++b) {
            add[a][b] = coset_of[g.add(representative[a], representative[b])];
        }
    }
    return Quotient{GroupTable::unchecked(std::move(add), coset_of[g.zero()]), std::move(coset_of),
                    std::move(representative)};
}

bool direct_sum_check(const GroupTable &g, const Subgroup &h, const Subgroup &k) {
    for (Element a : h.members) {
        if (a != g.zero() && k.contains(a)) {
            return false;
        }
    }
    std::vector<bool> covered(g.order(), false);
    for (Element a : h.members) {
        for (Element b : k.members) {
            covered[g.add(a, b)] = true;
        }
    }
    return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

bool is_pure_subgroup(const GroupTable &g, const Subgroup &h) {
    for (std::size_t n = 1; n < g.order(); ++n) {
        std::set<Element> ng;
        for (Element x = 0; x < g.order(); ++x) {
            ng.insert(g.multiple(n, x));
        }
        std::set<Element> nh;
        for (Element x : h.members) {
            nh.insert(g.multiple(n, x));
        }
        std::set<Element> meet;
        for (Element x : h.members) {
            if (ng.count(x)) {
                meet.insert(x);
            }
        }
        if (meet != nh) {
            return false;
        }
    }
    return true;
}

bool generates(const GroupTable &g, Element a) { return cyclic_subgroup(g, a).order() == g.order(); }

bool collinear_literal_claim(const GroupTable &g, const Subgroup &h, const Subgroup &k) {
    const Quotient q = quotient(g, h);
    for (Element y : k.members) {
        const bool generates_k = cyclic_subgroup(g, y).members == k.members;
        const bool generates_quotient = generates(q.table, q.coset_of[y]);
        if (generates_k && generates_quotient) {
            return false;
        }
    }
    return true;
}

bool collinear_reading_holds(const GroupTable &g, const Subgroup &h, const Subgroup &k) {
    if (!direct_sum_check(g, h, k)) {
        return false;
    }
    const Quotient q = quotient(g, h);
    if (k.order() != q.table.order()) {
        return false;
    }
    std::vector<bool> hit(q.table.order(), false);
    for (Element y : k.members) {
        if (hit[q.coset_of[y]]) {
            return false;
        }
        hit[q.coset_of[y]] = true;
        for (Element z : k.members) {
            if (q.coset_of[g.add(y, z)] != q.table.add(q.coset_of[y], q.coset_of[z])) {
                return false;
            }
        }
    }
    const bool trivial_h = h.order() == 1;
    for (Element y : k.members) {
        if (cyclic_subgroup(g, y).members == k.members && generates(g, y) != trivial_h) {
            return false;
        }
    }
    return true;
}

}  // namespace qrw::algebra

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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qrw::algebra {

inline constexpr std::size_t kMaxGroupOrder = 512;

using Element = std::size_t;

/// Finite abelian group on elements 0..order()-1 given by its addition
/// table.
class GroupTable {
   public:
    /// Validates closure, associativity, identity, inverses and
    /// commutativity exhaustively; throws StructuralError naming the first
    /// violated axiom, ArgumentError for orders outside 1..512.
    static GroupTable from_table(std::vector<std::vector<Element>> add, Element zero = 0);
    /// Same, without the axiom check (to exercise error paths).
    static GroupTable unchecked(std::vector<std::vector<Element>> add, Element zero = 0);
    /// Integers mod n under addition.
    static GroupTable cyclic(std::size_t n);
    /// a x b with (i, j) encoded as i * b.order() + j.
    static GroupTable direct_product(const GroupTable &a, const GroupTable &b);

    std::size_t order() const noexcept { return add_.size(); }
    Element zero() const noexcept { return zero_; }
    Element add(Element a, Element b) const { return add_.at(a).at(b); }
    Element negate(Element a) const;
    /// n * a for n >= 0.
    Element multiple(std::size_t n, Element a) const;

    /// First violated axiom, or nullopt.
    std::optional<std::string> axiom_violation() const;

   private:
    GroupTable(std::vector<std::vector<Element>> add, Element zero) : add_(std::move(add)), zero_(zero) {}
    std::vector<std::vector<Element>> add_;
    Element zero_;
};

/// Sorted member list of a subgroup.
struct Subgroup {
    std::vector<Element> members;

    std::size_t order() const noexcept { return members.size(); }
    bool contains(Element e) const;
    friend bool operator==(const Subgroup &, const Subgroup &) = default;
};

/// Checks that `members` contains zero and is closed under addition and
/// negation; throws StructuralError otherwise.
Subgroup make_subgroup(const GroupTable &g, std::vector<Element> members);

/// {n a : n in Z}.
Subgroup cyclic_subgroup(const GroupTable &g, Element a);

/// Smallest subgroup containing `generators`.
Subgroup generated_subgroup(const GroupTable &g, const std::vector<Element> &generators);

/// Every subgroup, ordered by (order, members).
std::vector<Subgroup> all_subgroups(const GroupTable &g);

struct Quotient {
    GroupTable table;
    /// coset_of[x]: label of x + H.
    std::vector<Element> coset_of;
    /// Smallest member of each coset.
    std::vector<Element> representative;
};

/// Coset group g / h, cosets labelled by increasing smallest member. Throws
/// StructuralError if |h| does not divide |g| or the cosets do not partition
/// g (possible only for unchecked tables).
Quotient quotient(const GroupTable &g, const Subgroup &h);

/// h and k intersect trivially and h + k covers g.
bool direct_sum_check(const GroupTable &g, const Subgroup &h, const Subgroup &k);

/// h n g = n h for every 1 <= n < |g|.
bool is_pure_subgroup(const GroupTable &g, const Subgroup &h);

/// True when `a` generates g.
bool generates(const GroupTable &g, Element a);

/// The cyclic collinear statement as literally encoded: no single element y is
/// both a generator of k and (through y + h) a generator of g / h.
bool collinear_literal_claim(const GroupTable &g, const Subgroup &h, const Subgroup &k);

/// The reading this toolkit verifies for g = h (+) k: the map k -> g/h,
/// y -> y + h, is a group isomorphism, and a generator of k generates g
/// exactly when h is trivial.
bool collinear_reading_holds(const GroupTable &g, const Subgroup &h, const Subgroup &k);

}  // namespace qrw::algebra

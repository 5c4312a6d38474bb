// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace twomat::effective {

// One factor W_{|S|+|L|}^{(genus)}(p^{S_0}, p_L, p^{S_1}, ...) of a multivalent vertex.
struct Block {
  std::vector<int> sheets;  // distinct non-physical sheets, the first one carries the head
  std::vector<int> labels;  // external arguments attached to this block
  int genus = 0;
};

// A product of blocks with pairwise disjoint sheet sets whose labels partition the
// external arguments.
struct PartitionTerm {
  std::vector<Block> blocks;
  int r() const noexcept { return static_cast<int>(blocks.size()); }
};

enum class TermShape {
  Interpolation,  // first block headed by a fixed sheet; factor prod (k_a - |K_a|)!
  Effective,      // all heads summed; factor r! prod |S_a|!
};

// Terms of the vertex sum at `genus` over labels 0..n_labels-1 and sheets 1..d2, with
// sum genus_a + sum (|S_a| - 1) = genus. Each unordered term appears once: blocks are
// sorted by their smallest sheet and sheets ascend within a block. Terms containing a
// vanishing W_1^(0) factor are omitted.
std::vector<PartitionTerm> canonical_terms(int d2, int n_labels, int genus, std::size_t budget = 1 << 20);

// The same sum enumerated with ordered blocks and ordered sheet tuples; each canonical
// term appears omega_factor(term, Effective) times.
std::vector<PartitionTerm> ordered_terms(int d2, int n_labels, int genus, std::size_t budget = 1 << 20);

bool is_canonical(const PartitionTerm& t);

// Multiplicity with which an enumeration of the given shape generates the term.
double omega_factor(const PartitionTerm& t, TermShape shape);

}  // namespace twomat::effective

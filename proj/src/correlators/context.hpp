// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "algebra/tensor.hpp"
#include "curve/curve.hpp"

namespace twomat::correlators {

using algebra::cx;
using algebra::Scalar;
using algebra::Tensor;

// Evaluation settings shared by all engines.
struct EvalConfig {
  int order = 0;                       // series truncation; 0 selects 6h + 2k + 8
  cx basepoint_o{0.3183, 0.5773};      // dS basepoint
  double tol = 1e-9;
  int max_retries = 3;
  int eps_window = 4;                  // exponents kept for the coincidence regulator
};

inline int default_order(int n, int h) { return 6 * h + 2 * n + 8; }

// Kinds of argument slots of a correlator.
//   Sym: kept symbolic; the result carries a tensor axis over the principal-part basis.
//   Num: a concrete point (number or series), contracted immediately.
//   Int: the regulated coincident point w_f + eps of a loop insertion.
enum class SlotKind { Sym, Num, Int };

struct Slot {
  SlotKind kind = SlotKind::Num;
  int id = 0;          // label of the tensor axis (Sym) or memo identity
  Scalar value;        // point value for Num and Int
  int dim = 0;         // axis extent for Sym
};

using Slots = std::vector<Slot>;

// Slot ids at or above this value are reserved for internally generated points.
inline constexpr int kInternalSlotId = 1 << 20;

std::string slots_key(const Slots& s);
// Sorts by (kind, id); correlators are symmetric in their tails.
void sort_slots(Slots& s);
// Subsets of `s` of size j, in lexicographic order of positions; returns (J, K-J) pairs.
std::vector<std::pair<Slots, Slots>> splittings(const Slots& s, int j);

// Principal-part basis for one argument: (q - c)^{-m} for m = 1..M over the centers,
// index (m - 1) * C + c. The head basis prepends the basepoint term 1/(q - o).
struct Basis {
  std::vector<cx> centers;
  int max_pole = 0;
  int dim() const { return static_cast<int>(centers.size()) * max_pole; }
};

std::vector<Scalar> tail_vector(const std::vector<cx>& centers, int max_pole, const Scalar& q);
std::vector<Scalar> head_vector(const std::vector<cx>& centers, int max_pole, cx o, const Scalar& q);

// Coefficients of B(w, q) = 1/(q - w)^2 in the tail basis, for a series w colliding with
// a center c (w(0) = c): (m - 1) g^{m - 2} with g = w - c. Entries for centers that w does
// not collide with are left zero.
std::vector<Scalar> bergmann_vector(const std::vector<cx>& centers, int max_pole, const Scalar& w);

// W_2^(0)(head, tail): the collision vector for a Sym tail, the exact value otherwise.
Tensor bergmann_tensor(const std::vector<cx>& centers, const Scalar& head, const Slot& tail);

// Sheet data at the current residue point: w_l, x'(w_l), y(w_l) and cached inverses.
struct Frame {
  int level = 0;       // level of the sheet values (0 numeric, 1 branch-point series)
  int branch = -1;     // branch index for local frames
  std::vector<Scalar> w;
  std::vector<Scalar> xp;
  std::vector<Scalar> y;
  std::vector<Scalar> inv_xp;
  std::vector<std::vector<Scalar>> inv_dy;  // inv_dy[i][l] = 1/(y_i - y_l)

  int sheets() const { return static_cast<int>(w.size()); }
};

Frame local_frame(const curve::SpectralCurve& c, int branch, int order);
Frame global_frame(const curve::SpectralCurve& c, const Scalar& z);

// Highest scalar level appearing in the slots or the frame.
int top_level(const Frame& f, const Slots& s);

// Regulated coincident point w + eps with eps the variable of `level`.
Scalar regulated_point(const Scalar& w, int level, int window);

// Constant term in the variable of `level`, applied entrywise.
Tensor eps_constant(const Tensor& t, int level);
// Largest modulus among the negative powers of the variable of `level`.
double eps_singular_part(const Tensor& t, int level);

// Contracts a stored coefficient tensor (axis 0 = head, axes 1.. = tails) with a head
// point and argument slots. Sym slots are renamed onto their ids.
Tensor contract_correlator(const Tensor& coeffs, const std::vector<cx>& head_centers,
                           const std::vector<cx>& tail_centers, int max_pole, cx o, const Scalar& head,
                           const Slots& tails);

// Extracts the head principal parts of sum_s Res_{t} F_s(t) dS_{a_s + t, o}(p) into
// coefficient tensors: axis 0 gains the head basis. Returns the largest modulus among
// discarded coefficients beyond max_pole.
double accumulate_head(Tensor& out, const Tensor& F, int branch, int branch_count, int max_pole);

}  // namespace twomat::correlators

#pragma once

// Root systems, Weyl groups, reduced words for the longest element with a
// Levi-compatible prefix, and the convex ordering of positive roots attached
// to such a word.
//
// Roots are integer vectors over the simple-root basis; weights are integer
// vectors over the fundamental-weight basis.  Both conventions keep every
// pairing used downstream exactly integral.

#include <string>
#include <vector>

namespace ueps::roots {

using IntVec = std::vector<int>;

struct WeylWord {
  std::vector<int> letters;  // simple-reflection indices, 0-based
  bool is_reduced = false;
};

struct RootSystemData {
  char type = 'A';
  int rank = 0;
  // cartan[i][j] = <alpha_j, alpha_i^vee>; s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i
  std::vector<std::vector<int>> cartan;
  std::vector<int> d;            // symmetrizer: (alpha_i, alpha_i)/2, integer
  std::vector<IntVec> pos_roots; // canonical order: by height, then lex

  int num_pos() const { return (int)pos_roots.size(); }

  IntVec reflect(int i, const IntVec& v) const;         // root coordinates
  IntVec reflect_weight(int i, const IntVec& m) const;  // weight coordinates
  IntVec root_to_weight(const IntVec& c) const;
  // (xi, beta) with xi over fundamental weights, beta over simple roots.
  long pair_weight_root(const IntVec& xi, const IntVec& beta) const;
  int root_index(const IntVec& v) const;  // -1 if not a positive root
  static int height(const IntVec& v);
};

struct LeviData {
  std::vector<int> simples;        // subset of {0..rank-1}, sorted
  std::vector<IntVec> pos_roots;   // Phi_L^+ in the ambient coordinates
  int n_l = 0;                     // |Phi_L ∩ Phi^+|
  int dim = 0;                     // |Phi_L| + rank
};

RootSystemData build_root_system(char type, int rank);
LeviData make_levi(const RootSystemData& rs, std::vector<int> simples);

// Weyl-group elements as images of the simple roots (root coordinates).
struct WeylElement {
  std::vector<IntVec> col;  // col[j] = w(alpha_j)
  static WeylElement identity(const RootSystemData& rs);
  IntVec apply(const IntVec& v) const;
};
WeylElement act(const RootSystemData& rs, const WeylWord& w);
int length(const RootSystemData& rs, const WeylElement& w);
bool word_is_reduced(const RootSystemData& rs, const std::vector<int>& letters);

// Lexicographically least reduced word for w0 whose first N_L letters are a
// reduced word for the longest element of W_L.
WeylWord longest_word_with_prefix(const RootSystemData& rs, const LeviData& levi);

// beta_r = s_{i_1}...s_{i_{r-1}}(alpha_{i_r}); w must be reduced for w0.
std::vector<IntVec> beta_sequence(const RootSystemData& rs, const WeylWord& w);

IntVec weyl_act(const RootSystemData& rs, const WeylWord& w, const IntVec& v);

std::string root_str(const IntVec& v);

}  // namespace ueps::roots

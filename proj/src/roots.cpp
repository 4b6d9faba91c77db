#include "ueps/roots.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ueps::roots {

IntVec RootSystemData::reflect(int i, const IntVec& v) const {
  // <v, alpha_i^vee> = sum_j v_j cartan[i][j]
  long p = 0;
  for (int j = 0; j < rank; ++j) p += (long)v[j] * cartan[i][j];
  IntVec w = v;
  w[i] -= (int)p;
  return w;
}

IntVec RootSystemData::reflect_weight(int i, const IntVec& m) const {
  // s_i(w_j) = w_j - delta_ij alpha_i, alpha_i = sum_t cartan[t][i] w_t
  IntVec out = m;
  int mi = m[i];
  if (mi == 0) return out;
  for (int t = 0; t < rank; ++t) out[t] -= mi * cartan[t][i];
  return out;
}

IntVec RootSystemData::root_to_weight(const IntVec& c) const {
  IntVec out(rank, 0);
  for (int t = 0; t < rank; ++t) {
    long s = 0;
    for (int j = 0; j < rank; ++j) s += (long)cartan[t][j] * c[j];
    out[t] = (int)s;
  }
  return out;
}

long RootSystemData::pair_weight_root(const IntVec& xi, const IntVec& beta) const {
  long s = 0;
  for (int j = 0; j < rank; ++j) s += (long)xi[j] * d[j] * beta[j];
  return s;
}

int RootSystemData::root_index(const IntVec& v) const {
  for (size_t i = 0; i < pos_roots.size(); ++i)
    if (pos_roots[i] == v) return (int)i;
  return -1;
}

int RootSystemData::height(const IntVec& v) {
  int h = 0;
  for (int x : v) h += x;
  return h;
}

namespace {

std::vector<std::vector<int>> cartan_matrix(char type, int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j, int aij, int aji) {
    a[i][j] = aij;  // <alpha_j, alpha_i^vee>
    a[j][i] = aji;
  };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':  // alpha_n short
      if (n < 2) throw std::invalid_argument("type B needs rank >= 2");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -2, -1);
      break;
    case 'C':  // alpha_n long
      if (n < 2) throw std::invalid_argument("type C needs rank >= 2");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -1, -2);
      break;
    case 'D':
      if (n < 3) throw std::invalid_argument("type D needs rank >= 3");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument("type G needs rank 2");
      link(0, 1, -1, -3);
      break;
    default:
      throw std::invalid_argument(std::string("unsupported type ") + type);
  }
  return a;
}

std::vector<int> symmetrizer(const std::vector<std::vector<int>>& a) {
  const int n = (int)a.size();
  // d_i a[i][j] = d_j a[j][i]; propagate along the Dynkin graph.
  std::vector<int> num(n, 0), den(n, 1);
  num[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0 || num[i] == 0 || num[j] != 0) continue;
        num[j] = num[i] * a[i][j];
        den[j] = den[i] * a[j][i];
        if (num[j] * den[j] < 0) {
          num[j] = std::abs(num[j]);
          den[j] = std::abs(den[j]);
        }
        changed = true;
      }
  }
  long L = 1;
  for (int i = 0; i < n; ++i) L = std::lcm(L, (long)den[i]);
  std::vector<int> d(n);
  long g = 0;
  for (int i = 0; i < n; ++i) {
    d[i] = (int)(num[i] * (L / den[i]));
    g = std::gcd(g, (long)d[i]);
  }
  for (int i = 0; i < n; ++i) d[i] /= (int)g;
  return d;
}

bool is_positive(const IntVec& v) {
  bool nonzero = false;
  for (int x : v) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

}  // namespace

RootSystemData build_root_system(char type, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (type == 'B' || type == 'C') {
    if (rank < 2) throw std::invalid_argument("rank too small for type");
  }
  if ((type == 'A' && rank > 8) || rank > 8)
    throw std::invalid_argument("rank out of supported range");
  RootSystemData rs;
  rs.type = type;
  rs.rank = rank;
  rs.cartan = cartan_matrix(type, rank);
  rs.d = symmetrizer(rs.cartan);

  // Positive roots by reflection closure of the simple roots.
  std::set<IntVec> seen;
  std::vector<IntVec> work;
  for (int i = 0; i < rank; ++i) {
    IntVec e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    work.push_back(e);
  }
  while (!work.empty()) {
    IntVec v = work.back();
    work.pop_back();
    for (int i = 0; i < rank; ++i) {
      IntVec w = rs.reflect(i, v);
      if (is_positive(w) && !seen.count(w)) {
        seen.insert(w);
        work.push_back(w);
      }
    }
  }
  rs.pos_roots.assign(seen.begin(), seen.end());
  std::sort(rs.pos_roots.begin(), rs.pos_roots.end(),
            [](const IntVec& x, const IntVec& y) {
              int hx = RootSystemData::height(x), hy = RootSystemData::height(y);
              if (hx != hy) return hx < hy;
              return x < y;
            });
  return rs;
}

LeviData make_levi(const RootSystemData& rs, std::vector<int> simples) {
  std::sort(simples.begin(), simples.end());
  for (int i : simples)
    if (i < 0 || i >= rs.rank) throw std::invalid_argument("bad Levi subset");
  std::vector<bool> in(rs.rank, false);
  for (int i : simples) in[i] = true;
  LeviData L;
  L.simples = std::move(simples);
  for (const auto& beta : rs.pos_roots) {
    bool ok = true;
    for (int j = 0; j < rs.rank; ++j)
      if (beta[j] != 0 && !in[j]) ok = false;
    if (ok) L.pos_roots.push_back(beta);
  }
  L.n_l = (int)L.pos_roots.size();
  L.dim = 2 * L.n_l + rs.rank;
  return L;
}

WeylElement WeylElement::identity(const RootSystemData& rs) {
  WeylElement w;
  for (int j = 0; j < rs.rank; ++j) {
    IntVec e(rs.rank, 0);
    e[j] = 1;
    w.col.push_back(e);
  }
  return w;
}

IntVec WeylElement::apply(const IntVec& v) const {
  const int n = (int)col.size();
  IntVec out(n, 0);
  for (int j = 0; j < n; ++j) {
    if (v[j] == 0) continue;
    for (int t = 0; t < n; ++t) out[t] += v[j] * col[j][t];
  }
  return out;
}

WeylElement act(const RootSystemData& rs, const WeylWord& w) {
  WeylElement e = WeylElement::identity(rs);
  // letters act right-to-left on vectors, so the composite sends
  // alpha_j -> s_{i_1}(...(s_{i_k}(alpha_j)))
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    for (auto& c : e.col) c = rs.reflect(*it, c);
  return e;
}

int length(const RootSystemData& rs, const WeylElement& w) {
  int cnt = 0;
  for (const auto& beta : rs.pos_roots)
    if (!is_positive(w.apply(beta))) ++cnt;
  return cnt;
}

bool word_is_reduced(const RootSystemData& rs, const std::vector<int>& letters) {
  WeylWord w{letters, false};
  return length(rs, act(rs, w)) == (int)letters.size();
}

namespace {

// Left-multiply element by s_i: (s_i w)(v) = s_i(w(v)).
WeylElement left_mul(const RootSystemData& rs, int i, const WeylElement& w) {
  WeylElement out = w;
  for (auto& c : out.col) c = rs.reflect(i, c);
  return out;
}

// Lexicographically least reduced word, built by repeatedly taking the least
// left descent.
std::vector<int> lex_least_word(const RootSystemData& rs, WeylElement w) {
  std::vector<int> word;
  int len = length(rs, w);
  while (len > 0) {
    bool found = false;
    for (int i = 0; i < rs.rank && !found; ++i) {
      WeylElement u = left_mul(rs, i, w);
      if (length(rs, u) == len - 1) {
        word.push_back(i);
        w = u;
        --len;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no descent found");
  }
  return word;
}

}  // namespace

WeylWord longest_word_with_prefix(const RootSystemData& rs, const LeviData& levi) {
  // w_L: greedy ascent inside W_L.
  WeylElement wl = WeylElement::identity(rs);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : levi.simples) {
      // s_i is an ascent of wl iff wl^{-1} has ... simpler: check length.
      WeylElement u = left_mul(rs, i, wl);
      if (length(rs, u) > length(rs, wl)) {
        wl = u;
        grew = true;
        break;
      }
    }
  }
  if (length(rs, wl) != levi.n_l) throw std::logic_error("w_L length mismatch");

  // w0: greedy ascent over all of W.
  WeylElement w0 = wl;
  grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < rs.rank; ++i) {
      WeylElement u = left_mul(rs, i, w0);
      if (length(rs, u) > length(rs, w0)) {
        w0 = u;
        grew = true;
        break;
      }
    }
  }
  if (length(rs, w0) != rs.num_pos()) throw std::logic_error("w0 length mismatch");

  std::vector<int> prefix = lex_least_word(rs, wl);
  // suffix: lex-least reduced word for w_L^{-1} w0 = w_L w0 (w_L involutive).
  WeylElement rest = w0;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    rest = left_mul(rs, *it, rest);
  std::vector<int> suffix = lex_least_word(rs, rest);

  WeylWord out;
  out.letters = prefix;
  out.letters.insert(out.letters.end(), suffix.begin(), suffix.end());
  out.is_reduced = true;
  if ((int)out.letters.size() != rs.num_pos() ||
      !word_is_reduced(rs, out.letters))
    throw std::logic_error("prefixed w0 word is not reduced");
  return out;
}

std::vector<IntVec> beta_sequence(const RootSystemData& rs, const WeylWord& w) {
  if (!word_is_reduced(rs, w.letters))
    throw std::invalid_argument("word is not reduced");
  if ((int)w.letters.size() != rs.num_pos())
    throw std::invalid_argument("word is not a w0 word");
  std::vector<IntVec> betas;
  for (size_t r = 0; r < w.letters.size(); ++r) {
    IntVec v(rs.rank, 0);
    v[w.letters[r]] = 1;
    for (size_t t = r; t-- > 0;) v = rs.reflect(w.letters[t], v);
    betas.push_back(v);
  }
  return betas;
}

IntVec weyl_act(const RootSystemData& rs, const WeylWord& w, const IntVec& v) {
  IntVec out = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out = rs.reflect(*it, out);
  return out;
}

std::string root_str(const IntVec& v) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) os << (v[i] > 0 ? "+" : "-");
    else if (v[i] < 0) os << "-";
    first = false;
    int a = std::abs(v[i]);
    if (a != 1) os << a << "*";
    os << "a" << (i + 1);
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ueps::roots

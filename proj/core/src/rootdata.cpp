#include "sheetcalc/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

#include "sheetcalc/errors.hpp"

namespace sheetcalc {

namespace {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

std::vector<std::vector<int>> cartan_for(const CartanType& t) {
  const int l = t.rank;
  std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  const int chain = (t.family == Family::D) ? l - 1 : l;
  for (int i = 0; i + 1 < chain; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  switch (t.family) {
    case Family::A:
      break;
    case Family::B:
      // alpha_l short: <alpha_{l-1}, alpha_l^vee> = -2.
      if (l >= 2) a[l - 1][l - 2] = -2;
      break;
    case Family::C:
      // alpha_l long: <alpha_l, alpha_{l-1}^vee> = -2.
      if (l >= 2) a[l - 2][l - 1] = -2;
      break;
    case Family::D:
      if (l >= 3) a[l - 1][l - 3] = a[l - 3][l - 1] = -1;
      break;
  }
  return a;
}

// d_i = (alpha_i, alpha_i)/2 with d_i a_ij = d_j a_ji, shortest d = 1.
std::vector<Rational> symmetrizer(const std::vector<std::vector<int>>& a) {
  const std::size_t l = a.size();
  std::vector<Rational> d(l, 0);
  for (std::size_t start = 0; start < l; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const auto i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < l; ++j) {
        if (i == j || a[i][j] == 0 || d[j] != 0) continue;
        d[j] = d[i] * a[i][j] / a[j][i];
        queue.push_back(j);
      }
    }
  }
  const Rational lo = *std::min_element(d.begin(), d.end());
  for (auto& x : d) x /= lo;
  return d;
}

bool is_positive(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
}

int root_height(const Root& r) {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

}  // namespace

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw ConfigError("bad Cartan type '" + std::string(text) + "'");
  CartanType t;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    default:
      throw ConfigError("unsupported Cartan family '" + std::string(1, text[0]) +
                        "' (supported: A, B, C, D)");
  }
  const auto digits = text.substr(1);
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ConfigError("bad Cartan type '" + std::string(text) + "'");
  }
  t.rank = std::stoi(std::string(digits));
  if (t.rank < 1) throw ConfigError("rank must be at least 1 in '" + std::string(text) + "'");
  return t;
}

std::string CartanType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

int RootSystemOptions::default_max_rank() {
  if (const char* env = std::getenv("SHEETCALC_MAX_RANK")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return 6;
}

std::size_t positive_root_count(const CartanType& t) {
  const auto l = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
  }
  return 0;
}

RootSystem build_root_system(const CartanType& t, const RootSystemOptions& opts) {
  if (t.rank < 1) throw ConfigError("rank must be at least 1, got " + std::to_string(t.rank));
  if (t.rank > opts.max_rank) {
    throw ConfigError("rank " + std::to_string(t.rank) + " of " + t.name() + " exceeds the rank bound " +
                      std::to_string(opts.max_rank) + " (raise SHEETCALC_MAX_RANK to override)");
  }
  if ((t.family == Family::B || t.family == Family::C) && t.rank < 2)
    throw ConfigError("type " + t.name() + " needs rank >= 2 (use A1)");
  if (t.family == Family::D) {
    const int min_rank = opts.allow_low_rank_d ? 2 : 4;
    if (t.rank < min_rank) {
      throw ConfigError("type " + t.name() + " needs rank >= " + std::to_string(min_rank) +
                        (opts.allow_low_rank_d ? "" : " (D2, D3 need allow_low_rank_d)"));
    }
  }

  RootSystem rs;
  rs.type_ = t;
  rs.cartan_ = cartan_for(t);
  rs.half_length_ = symmetrizer(rs.cartan_);
  const std::size_t l = rs.rank();

  // Reflection closure of the simple roots gives all of Delta.
  std::set<Root> all;
  std::deque<Root> queue;
  for (std::size_t i = 0; i < l; ++i) {
    Root a(l, 0);
    a[i] = 1;
    all.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    const Root beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < l; ++i) {
      Root img = beta;
      img[i] -= rs.coroot_pairing(beta, i);
      if (all.insert(img).second) queue.push_back(img);
    }
  }
  for (const auto& r : all)
    if (is_positive(r)) rs.positive_.push_back(r);
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const Root& a, const Root& b) {
    const int ha = root_height(a), hb = root_height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  const std::size_t r = rs.positive_.size();
  rs.sum_table_.assign(r, std::vector<std::optional<std::size_t>>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) rs.sum_table_[i][j] = rs.index_of(rs.positive_[i] + rs.positive_[j]);

  // Exponent h occurs (#roots of height h) - (#roots of height h+1) times.
  std::vector<int> by_height;
  for (const auto& p : rs.positive_) {
    const auto h = static_cast<std::size_t>(root_height(p));
    if (by_height.size() <= h + 1) by_height.resize(h + 2, 0);
    ++by_height[h];
  }
  for (std::size_t h = 1; h + 1 < by_height.size(); ++h)
    for (int k = 0; k < by_height[h] - by_height[h + 1]; ++k) rs.exponents_.push_back(static_cast<int>(h));
  std::sort(rs.exponents_.begin(), rs.exponents_.end());
  return rs;
}

std::vector<int> exponents(const CartanType& t, const RootSystemOptions& opts) {
  return build_root_system(t, opts).exponents();
}

std::vector<Root> RootSystem::simple_roots() const {
  return {positive_.begin(), positive_.begin() + static_cast<std::ptrdiff_t>(rank())};
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  // Binary search would need the comparison order; the lists are short.
  for (std::size_t i = 0; i < positive_.size(); ++i)
    if (positive_[i] == r) return i;
  return std::nullopt;
}

bool RootSystem::is_root(const Root& r) const {
  if (index_of(r)) return true;
  Root neg(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
  return index_of(neg).has_value();
}

int RootSystem::height(std::size_t i) const { return root_height(positive_[i]); }

int RootSystem::coroot_pairing(const Root& beta, std::size_t i) const {
  int s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * cartan_[i][j];
  return s;
}

Rational RootSystem::form(const Root& a, const Root& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0 || cartan_[i][j] == 0) continue;
      s += half_length_[i] * a[i] * b[j] * cartan_[i][j];
    }
  }
  return s;
}

Root RootSystem::coroot(const Root& phi) const {
  const Rational len = form(phi, phi);
  Root out(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    Rational c = 2 * phi[i] * half_length_[i] / len;
    out[i] = static_cast<int>(c.get_num().get_si());
  }
  return out;
}

Root RootSystem::two_rho() const {
  Root s(rank(), 0);
  for (const auto& p : positive_) s = s + p;
  return s;
}

Root operator+(const Root& a, const Root& b) {
  Root c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

Root operator-(const Root& a, const Root& b) {
  Root c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  os << ']';
  return os.str();
}

}  // namespace sheetcalc

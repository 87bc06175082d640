#include "perdom/dm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <thread>

namespace perdom::dm {

std::vector<long> WeightSystem::numerators() const {
  std::vector<long> out;
  for (const auto& x : entries_) out.push_back(Rational(x * Rational(d_)).get_num().get_si());
  return out;
}

Integer WeightSystem::total() const {
  Rational s = 0;
  for (const auto& x : entries_) s += x;
  return s.get_num();
}

std::string WeightSystem::to_string() const {
  std::ostringstream os;
  const auto ks = numerators();
  for (std::size_t i = 0; i < ks.size(); ++i) os << (i ? "," : "") << ks[i] << '/' << d_;
  return os.str();
}

WeightSystem validate_weights(std::vector<Rational> mu) {
  if (mu.empty()) throw InputError("weight system is empty");
  Rational sum = 0;
  Integer d = 1;
  for (auto& x : mu) {
    x.canonicalize();
    if (x <= 0 || x >= 1) throw InputError("cond1 violated: every weight must satisfy 0 < mu_i < 1");
    sum += x;
    d = lcm(d, Integer(x.get_den()));
  }
  if (sum.get_den() != 1) throw InputError("cond2 violated: the sum of weights must be an integer");
  if (!d.fits_slong_p()) throw InputError("common denominator too large");
  std::sort(mu.begin(), mu.end(), [](const Rational& a, const Rational& b) { return a > b; });
  WeightSystem w;
  w.entries_ = std::move(mu);
  w.d_ = d.get_si();
  return w;
}

std::vector<Rational> parse_weights(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) throw InputError("empty weight in list");
    long reps = 1;
    if (auto star = item.find('*'); star != std::string::npos) {
      try {
        std::size_t used = 0;
        reps = std::stol(item.substr(star + 1), &used);
        if (used != item.size() - star - 1) throw InputError("");
      } catch (const std::exception&) {
        throw InputError("bad repetition count in '" + item + "'");
      }
      if (reps < 1 || reps > 10000) throw InputError("repetition count out of range in '" + item + "'");
      item = item.substr(0, star);
    }
    Rational r;
    if (item.find_first_not_of("0123456789/-+") != std::string::npos || r.set_str(item, 10) != 0 ||
        r.get_den() == 0)
      throw InputError("bad rational '" + item + "'");
    r.canonicalize();
    for (long i = 0; i < reps; ++i) out.push_back(r);
  }
  if (out.empty()) throw InputError("empty weight list");
  return out;
}

namespace {

// k_i + k_j < d  =>  (d - k_i - k_j) | d, doubled for equal pairs under Sigma-INT.
inline bool pair_ok(long a, long b, long d, bool sigma) {
  const long r = d - a - b;
  if (r <= 0) return true;
  const long num = (sigma && a == b) ? 2 * d : d;
  return num % r == 0;
}

bool check_pairs(const WeightSystem& mu, bool sigma) {
  const auto k = mu.numerators();
  const long d = mu.d();
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j)
      if (!pair_ok(k[i], k[j], d, sigma)) return false;
  return true;
}

struct DenominatorSearch {
  long d;
  std::size_t m;
  bool sigma;
  bool reverse;
  std::vector<long> cand;
  std::vector<long> chosen;
  std::vector<std::vector<long>> out;

  void run() {
    for (long s = 1; s * static_cast<long>(m) <= 2 * d; ++s) {
      cand.clear();
      for (long k = s; k < d; ++k)
        if (pair_ok(k, s, d, sigma)) cand.push_back(k);
      if (reverse) std::reverse(cand.begin(), cand.end());
      chosen.assign(1, s);
      extend(2 * d - s, m - 1);
    }
  }

  void finish(long last) {
    if (last < chosen.back() || last >= d) return;
    for (long c : chosen)
      if (!pair_ok(c, last, d, sigma)) return;
    long g = d;
    for (long c : chosen) g = std::gcd(g, c);
    if (std::gcd(g, last) != 1) return;
    std::vector<long> ks = chosen;
    ks.push_back(last);
    out.push_back(std::move(ks));
  }

  void extend(long rem, std::size_t left) {
    if (left == 1) {
      finish(rem);
      return;
    }
    const long prev = chosen.back();
    for (long v : cand) {
      if (v < prev) continue;
      // Every remaining entry is >= v and < d.
      if (v * static_cast<long>(left) > rem) {
        if (reverse) continue;
        break;
      }
      if (rem - v > static_cast<long>(left - 1) * (d - 1)) continue;
      bool ok = true;
      for (std::size_t i = 1; i < chosen.size() && ok; ++i) ok = pair_ok(chosen[i], v, d, sigma);
      if (!ok) continue;
      chosen.push_back(v);
      extend(rem - v, left - 1);
      chosen.pop_back();
    }
  }
};

}  // namespace

bool is_int(const WeightSystem& mu) { return check_pairs(mu, false); }

bool is_sigma_int(const WeightSystem& mu) { return check_pairs(mu, true); }

std::vector<WeightSystem> enumerate(std::size_t m, Condition cond, const EnumOptions& opts) {
  if (m < 3) throw InputError("enumeration requires m >= 3");
  if (opts.d_max < 2) throw InputError("d_max must be at least 2");
  const bool sigma = cond == Condition::SigmaINT;
  std::vector<long> ds;
  for (long d = 2; d <= opts.d_max; ++d) ds.push_back(d);
  if (opts.reverse_order) std::reverse(ds.begin(), ds.end());

  std::vector<std::vector<std::vector<long>>> per(ds.size());
  auto work = [&](std::size_t i) {
    DenominatorSearch s{ds[i], m, sigma, opts.reverse_order, {}, {}, {}};
    s.run();
    per[i] = std::move(s.out);
  };
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < ds.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < ds.size(); i += threads) work(i);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<WeightSystem> out;
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (const auto& ks : per[i]) {
      std::vector<Rational> mu;
      for (long k : ks) mu.emplace_back(k, ds[i]);
      out.push_back(validate_weights(std::move(mu)));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const char* to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::StrictlySemistable: return "strictly semistable";
    case Stability::Unstable: return "unstable";
  }
  return "?";
}

StabilityVerdict git_classify(const std::vector<long>& k, const std::vector<std::vector<std::size_t>>& groups) {
  const std::size_t m = k.size();
  if (m == 0) throw InputError("weight list is empty");
  for (long x : k)
    if (x <= 0) throw InputError("weights must be positive");
  std::vector<int> seen(m, 0);
  for (const auto& g : groups) {
    if (g.empty()) throw InputError("empty coincidence class");
    for (std::size_t i : g) {
      if (i >= m) throw InputError("coincidence class index out of range");
      if (seen[i]++) throw InputError("coincidence classes overlap");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw InputError("coincidence classes do not cover all points");

  const long total = std::accumulate(k.begin(), k.end(), 0L);
  StabilityVerdict v;
  std::vector<std::vector<std::size_t>> over, equal;
  for (const auto& g : groups) {
    long s = 0;
    for (std::size_t i : g) s += k[i];
    if (2 * s > total) over.push_back(g);
    else if (2 * s == total) equal.push_back(g);
  }
  if (!over.empty()) {
    v.verdict = Stability::Unstable;
    v.witnesses = std::move(over);
  } else if (!equal.empty()) {
    v.verdict = Stability::StrictlySemistable;
    v.witnesses = std::move(equal);
  }
  return v;
}

long cyclic_cover_genus(long d, const std::vector<long>& k) {
  if (d < 2) throw InputError("degree d must be at least 2");
  if (k.empty()) throw InputError("exponent list is empty");
  long g = d, sum = 0;
  for (long x : k) {
    g = std::gcd(g, x);
    sum += x;
  }
  if (g != 1) throw InputError("gcd(d, k_1, ..., k_n) must be 1 (the cover is reducible)");
  long twice = -2 * d;
  for (long x : k) twice += d - std::gcd(d, x);
  twice += d - std::gcd(d, sum);
  return (twice + 2) / 2;
}

long ball_dimension(long m) {
  if (m < 4) throw InputError("ball dimension requires m >= 4");
  return m - 3;
}

}  // namespace perdom::dm

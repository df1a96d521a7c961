// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Incremental double description for polyhedral cones, Chernikova style:
// the cone span(lines) + cone(rays) is intersected with one half-space
// {x : <a, x> <= 0} at a time. A constraint hitting the lineality space
// consumes one line (pivoting); otherwise rays are split by sign and
// adjacent pairs across the hyperplane are combined. Adjacency is the
// combinatorial saturation test, so the maintained ray set stays minimal.
//
// Everything is exact: lines are kept in reduced row echelon form and rays
// as primitive integer vectors reduced modulo the lineality space.

#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "exactjoin/errors.hpp"
#include "exactjoin/linear.hpp"

namespace exactjoin {

namespace detail {

// Scale a rational vector to a primitive integer vector (same direction).
inline void primitive_normalize(Vec& v) {
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& q : v) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.denominator().get_mpz_t());
  }
  if (num_gcd == 0)
    return;
  Rational scale = Rational::from_mpz(den_lcm, num_gcd);
  for (auto& q : v)
    q *= scale;
}

struct SatSet {
  std::vector<std::uint64_t> bits;

  void resize(std::size_t n) { bits.assign((n + 63) / 64, 0); }
  void set(std::size_t t) { bits[t / 64] |= std::uint64_t(1) << (t % 64); }
  bool test(std::size_t t) const { return bits[t / 64] >> (t % 64) & 1; }

  // (a & b) subset of c, all of equal width.
  static bool intersection_subset(const SatSet& a, const SatSet& b, const SatSet& c) {
    for (std::size_t w = 0; w < a.bits.size(); ++w)
      if ((a.bits[w] & b.bits[w]) & ~c.bits[w])
        return false;
    return true;
  }
};

} // namespace detail

class DDCone {
public:
  explicit DDCone(std::size_t dim) : d_(dim) {
    lines_.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      Vec e(dim, Rational(0));
      e[i] = Rational(1);
      lines_.push_back(std::move(e));
    }
  }

  std::size_t dim() const { return d_; }
  const std::vector<Vec>& lines() const { return lines_; }
  const std::vector<Vec>& rays() const { return rays_; }

  // Intersect with {x : <a, x> <= 0}.
  void add_constraint(const Vec& a) {
    if (a.size() != d_)
      throw Error(Errc::precondition, "DDCone: constraint of wrong dimension");
    if (is_zero_vec(a))
      return;

    // A line not saturating the constraint pivots into a ray.
    for (std::size_t t = 0; t < lines_.size(); ++t) {
      Rational s = dot(a, lines_[t]);
      if (s.is_zero())
        continue;
      Vec pivot = std::move(lines_[t]);
      lines_.erase(lines_.begin() + static_cast<std::ptrdiff_t>(t));
      if (s.sign() > 0) {
        for (auto& q : pivot)
          q = -q;
        s = -s;
      }
      // Project the remaining lines and all rays onto the hyperplane.
      for (auto& l : lines_) {
        Rational c = dot(a, l) / s;
        for (std::size_t x = 0; x < d_; ++x)
          l[x] -= c * pivot[x];
      }
      for (auto& r : rays_) {
        Rational c = dot(a, r) / s;
        for (std::size_t x = 0; x < d_; ++x)
          r[x] -= c * pivot[x];
      }
      rays_.push_back(std::move(pivot));
      added_.push_back(a);
      renormalize();
      return;
    }

    // Ray step: split by sign, keep <=0 side, combine across the hyperplane.
    std::vector<Rational> val(rays_.size());
    std::vector<int> sign(rays_.size());
    for (std::size_t r = 0; r < rays_.size(); ++r) {
      val[r] = dot(a, rays_[r]);
      sign[r] = val[r].sign();
    }
    std::vector<detail::SatSet> sat(rays_.size());
    for (std::size_t r = 0; r < rays_.size(); ++r) {
      sat[r].resize(added_.size());
      for (std::size_t t = 0; t < added_.size(); ++t)
        if (dot(added_[t], rays_[r]).is_zero())
          sat[r].set(t);
    }

    std::vector<Vec> next;
    for (std::size_t r = 0; r < rays_.size(); ++r)
      if (sign[r] <= 0)
        next.push_back(rays_[r]);
    for (std::size_t p = 0; p < rays_.size(); ++p) {
      if (sign[p] <= 0)
        continue;
      for (std::size_t m = 0; m < rays_.size(); ++m) {
        if (sign[m] >= 0)
          continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays_.size() && adjacent; ++o) {
          if (o == p || o == m)
            continue;
          if (detail::SatSet::intersection_subset(sat[p], sat[m], sat[o]))
            adjacent = false;
        }
        if (!adjacent)
          continue;
        Vec combo(d_);
        for (std::size_t x = 0; x < d_; ++x)
          combo[x] = val[p] * rays_[m][x] - val[m] * rays_[p][x];
        next.push_back(std::move(combo));
      }
    }
    rays_ = std::move(next);
    added_.push_back(a);
    renormalize();
  }

private:
  // Lines to RREF, rays reduced modulo the lineality space, everything
  // primitive; zero rays and duplicates dropped.
  void renormalize() {
    // RREF on lines.
    std::size_t row = 0;
    for (std::size_t col = 0; col < d_ && row < lines_.size(); ++col) {
      std::size_t piv = row;
      while (piv < lines_.size() && lines_[piv][col].is_zero())
        ++piv;
      if (piv == lines_.size())
        continue;
      std::swap(lines_[row], lines_[piv]);
      Rational lead = lines_[row][col];
      for (auto& q : lines_[row])
        q /= lead;
      for (std::size_t r2 = 0; r2 < lines_.size(); ++r2) {
        if (r2 == row || lines_[r2][col].is_zero())
          continue;
        Rational c = lines_[r2][col];
        for (std::size_t x = 0; x < d_; ++x)
          lines_[r2][x] -= c * lines_[row][x];
      }
      line_pivots_.resize(row + 1);
      line_pivots_[row] = col;
      ++row;
    }
    lines_.resize(row);
    line_pivots_.resize(row);
    for (auto& l : lines_)
      detail::primitive_normalize(l);

    for (auto& r : rays_) {
      for (std::size_t t = 0; t < lines_.size(); ++t) {
        std::size_t col = line_pivots_[t];
        if (r[col].is_zero())
          continue;
        Rational c = r[col] / lines_[t][col];
        for (std::size_t x = 0; x < d_; ++x)
          r[x] -= c * lines_[t][x];
      }
      detail::primitive_normalize(r);
    }
    std::vector<Vec> unique;
    for (auto& r : rays_) {
      if (is_zero_vec(r))
        continue;
      bool dup = false;
      for (const auto& u : unique)
        if (compare_vec(u, r) == 0) {
          dup = true;
          break;
        }
      if (!dup)
        unique.push_back(std::move(r));
    }
    rays_ = std::move(unique);
  }

  std::size_t d_;
  std::vector<Vec> lines_;
  std::vector<std::size_t> line_pivots_;
  std::vector<Vec> rays_;
  std::vector<Vec> added_;
};

} // namespace exactjoin

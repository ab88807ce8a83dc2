#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace nashseq {

/// A lattice point of N^m. When the ambient ring is K[t,X], entry 0 is the
/// t-exponent.
///
/// Totally ordered by (|a|, a_0, a_1, ...) lexicographically, so the
/// minimum of a support is the initial exponent.
class ExponentVector {
public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t m) : e_(m, 0) {}
  ExponentVector(std::initializer_list<std::uint32_t> entries) : e_(entries) { recount(); }
  explicit ExponentVector(std::vector<std::uint32_t> entries) : e_(std::move(entries)) { recount(); }

  static ExponentVector unit(std::size_t m, std::size_t i) {
    ExponentVector v(m);
    v.e_.at(i) = 1;
    v.degree_ = 1;
    return v;
  }

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t degree() const { return degree_; }
  const std::vector<std::uint32_t>& entries() const { return e_; }

  void set(std::size_t i, std::uint32_t value) {
    degree_ = degree_ - e_.at(i) + value;
    e_[i] = value;
  }

  bool is_zero() const { return degree_ == 0; }

  /// Componentwise <=, i.e. X^this divides X^other.
  bool divides(const ExponentVector& other) const {
    check(other);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  /// Componentwise max.
  ExponentVector join(const ExponentVector& other) const {
    check(other);
    ExponentVector r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
    r.recount();
    return r;
  }

  ExponentVector& operator+=(const ExponentVector& o) {
    check(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    degree_ += o.degree_;
    return *this;
  }
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }

  /// this - other; requires other.divides(*this).
  ExponentVector operator-(const ExponentVector& o) const {
    if (!o.divides(*this)) throw std::domain_error("exponent subtraction would go negative");
    ExponentVector r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    r.degree_ -= o.degree_;
    return r;
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) { return a.e_ == b.e_; }
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.e_ <=> b.e_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e_[i]);
    }
    return s + ")";
  }

private:
  void recount() {
    degree_ = 0;
    for (auto x : e_) degree_ += x;
  }
  void check(const ExponentVector& o) const {
    if (o.e_.size() != e_.size()) throw std::invalid_argument("exponent vectors of different lengths");
  }

  std::vector<std::uint32_t> e_;
  std::uint32_t degree_ = 0;
};

} // namespace nashseq

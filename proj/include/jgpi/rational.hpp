#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace jgpi {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational scalar. Thin value wrapper over GMP's mpq_class; every
/// value is kept canonical (lowest terms, positive denominator) and gmpxx
/// expression templates never leak into client code.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(int n) : v_(static_cast<long>(n)) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw Error("rational with zero denominator");
        v_.canonicalize();
    }

    // Accepts "p" or "p/q" with optional sign.
    static Rat parse(const std::string& s) {
        Rat r;
        if (s.empty() || mpq_set_str(r.v_.get_mpq_t(), s.c_str(), 10) != 0)
            throw Error("bad rational literal: '" + s + "'");
        if (mpz_sgn(mpq_denref(r.v_.get_mpq_t())) == 0)
            throw Error("rational with zero denominator: '" + s + "'");
        r.v_.canonicalize();
        return r;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rat operator-() const {
        Rat r;
        r.v_ = -v_;
        return r;
    }
    Rat& operator+=(const Rat& o) {
        v_ += o.v_;
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        v_ -= o.v_;
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        v_ *= o.v_;
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw Error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    /// "p" or "p/q", canonical.
    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace jgpi

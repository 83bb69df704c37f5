#ifndef QACS_CYCLOTOMIC_HPP
#define QACS_CYCLOTOMIC_HPP

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "qacs/errors.hpp"
#include "qacs/rational.hpp"

namespace qacs {

namespace detail {

/* Dense univariate polynomials over Q, ascending coefficients, used only
 * for building cyclotomic moduli and for residue arithmetic. */
using RatPoly = std::vector<Rational>;

inline void poly_trim(RatPoly& p)
{
	while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b)
{
	if (a.empty() || b.empty()) return {};
	RatPoly out(a.size() + b.size() - 1, Rational());
	for (std::size_t i = 0; i < a.size(); ++i) {
		if (a[i].is_zero()) continue;
		for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
	}
	return out;
}

/* Quotient and remainder of a by b, b nonzero. */
inline std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly& b)
{
	RatPoly bb = b;
	poly_trim(bb);
	if (bb.empty()) throw DivisionByZero("polynomial division by zero");
	poly_trim(a);
	const Rational lead_inv = bb.back().inverse();
	RatPoly quot;
	if (a.size() >= bb.size()) quot.assign(a.size() - bb.size() + 1, Rational());
	while (a.size() >= bb.size()) {
		const Rational c = a.back() * lead_inv;
		const std::size_t shift = a.size() - bb.size();
		quot[shift] = c;
		for (std::size_t i = 0; i < bb.size(); ++i) a[shift + i] -= c * bb[i];
		a.pop_back();
		poly_trim(a);
	}
	return {quot, a};
}

} // namespace detail

/* The N-th cyclotomic polynomial, monic of degree phi(N), with exact
 * rational (in fact integer) coefficients stored lowest degree first. */
struct CyclotomicPolynomial {
	int order = 0;
	std::vector<Rational> coefficients;

	int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

/* Phi_N by exact division: Phi_N = (x^N - 1) / prod_{d|N, d<N} Phi_d.
 * The division must be remainder-free; a nonzero remainder would mean a
 * broken divisor enumeration, so it is a hard error. */
inline CyclotomicPolynomial cyclotomic_polynomial(int n)
{
	if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");

	static std::mutex mu;
	static std::map<int, CyclotomicPolynomial> cache;
	std::lock_guard<std::mutex> lock(mu);

	auto compute = [&](auto&& self, int m) -> const CyclotomicPolynomial& {
		auto it = cache.find(m);
		if (it != cache.end()) return it->second;

		detail::RatPoly num(static_cast<std::size_t>(m) + 1, Rational());
		num[0] = Rational(-1);
		num[static_cast<std::size_t>(m)] = Rational(1);
		for (int d = 1; d < m; ++d) {
			if (m % d != 0) continue;
			const CyclotomicPolynomial& phi_d = self(self, d);
			auto [quot, rem] = detail::poly_divmod(num, phi_d.coefficients);
			if (!rem.empty())
				throw Error("cyclotomic_polynomial: nonzero remainder in divisor product");
			num = std::move(quot);
		}
		CyclotomicPolynomial out;
		out.order = m;
		out.coefficients = std::move(num);
		return cache.emplace(m, std::move(out)).first->second;
	};
	return compute(compute, n);
}

namespace detail {

struct CyclotomicFieldData {
	int order = 0;                 // N
	int degree = 0;                // phi(N)
	RatPoly modulus;               // Phi_N, monic, length degree+1
	std::vector<RatPoly> zeta_pow; // x^k mod Phi_N for k = 0..N-1, length degree each

	static std::shared_ptr<const CyclotomicFieldData> get(int n)
	{
		if (n < 1) throw std::invalid_argument("cyclotomic field order must be >= 1");
		static std::mutex mu;
		static std::map<int, std::shared_ptr<const CyclotomicFieldData>> cache;
		std::lock_guard<std::mutex> lock(mu);
		auto it = cache.find(n);
		if (it != cache.end()) return it->second;

		auto data = std::make_shared<CyclotomicFieldData>();
		data->order = n;
		const CyclotomicPolynomial phi = cyclotomic_polynomial(n);
		data->degree = phi.degree();
		data->modulus = phi.coefficients;
		data->zeta_pow.reserve(static_cast<std::size_t>(n));
		for (int k = 0; k < n; ++k) {
			RatPoly mono(static_cast<std::size_t>(k) + 1, Rational());
			mono[static_cast<std::size_t>(k)] = Rational(1);
			RatPoly rem = poly_divmod(std::move(mono), data->modulus).second;
			rem.resize(static_cast<std::size_t>(data->degree), Rational());
			data->zeta_pow.push_back(std::move(rem));
		}
		cache.emplace(n, data);
		return data;
	}
};

} // namespace detail

/* An element of Q(zeta_N), stored as the residue of a polynomial in
 * zeta_N modulo Phi_N. Working modulo Phi_N rather than x^N - 1 keeps the
 * ring a field, so every nonzero element is invertible. Equality is
 * residue equality. */
class CyclotomicNumber {
  public:
	CyclotomicNumber() = default;

	int order() const { return data_->order; }
	const std::vector<Rational>& residue() const { return residue_; }

	bool is_zero() const
	{
		for (const Rational& r : residue_)
			if (!r.is_zero()) return false;
		return true;
	}

	CyclotomicNumber operator-() const
	{
		CyclotomicNumber out(*this);
		for (Rational& r : out.residue_) r = -r;
		return out;
	}

	CyclotomicNumber& operator+=(const CyclotomicNumber& o)
	{
		check_same_field(o);
		for (std::size_t i = 0; i < residue_.size(); ++i) residue_[i] += o.residue_[i];
		return *this;
	}

	CyclotomicNumber& operator-=(const CyclotomicNumber& o)
	{
		check_same_field(o);
		for (std::size_t i = 0; i < residue_.size(); ++i) residue_[i] -= o.residue_[i];
		return *this;
	}

	CyclotomicNumber& operator*=(const CyclotomicNumber& o)
	{
		check_same_field(o);
		const int deg = data_->degree;
		/* Schoolbook product of the residues followed by reduction modulo
		 * the monic Phi_N, top coefficient first. */
		std::vector<Rational> prod(static_cast<std::size_t>(2 * deg - 1), Rational());
		for (int i = 0; i < deg; ++i) {
			if (residue_[static_cast<std::size_t>(i)].is_zero()) continue;
			for (int j = 0; j < deg; ++j)
				prod[static_cast<std::size_t>(i + j)] +=
					residue_[static_cast<std::size_t>(i)] * o.residue_[static_cast<std::size_t>(j)];
		}
		for (int d = 2 * deg - 2; d >= deg; --d) {
			const Rational c = prod[static_cast<std::size_t>(d)];
			if (c.is_zero()) continue;
			for (int i = 0; i < deg; ++i)
				prod[static_cast<std::size_t>(d - deg + i)] -=
					c * data_->modulus[static_cast<std::size_t>(i)];
			prod[static_cast<std::size_t>(d)] = Rational();
		}
		prod.resize(static_cast<std::size_t>(deg));
		residue_ = std::move(prod);
		return *this;
	}

	friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
	friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
	friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }

	friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b)
	{
		a.check_same_field(b);
		return a.residue_ == b.residue_;
	}
	friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

  private:
	friend class CyclotomicField;
	friend CyclotomicNumber invert(const CyclotomicNumber&);
	friend Rational rational_part(const CyclotomicNumber&);

	CyclotomicNumber(std::shared_ptr<const detail::CyclotomicFieldData> data,
					 std::vector<Rational> residue)
		: data_(std::move(data)), residue_(std::move(residue))
	{
	}

	void check_same_field(const CyclotomicNumber& o) const
	{
		if (!data_ || !o.data_ || data_->order != o.data_->order)
			throw std::invalid_argument("cyclotomic numbers from different fields");
	}

	std::shared_ptr<const detail::CyclotomicFieldData> data_;
	std::vector<Rational> residue_;
};

/* Inverse by the extended Euclidean algorithm in Q[x] against Phi_N.
 * Phi_N is irreducible over Q, so the gcd with any nonzero residue is a
 * nonzero constant and u*a + v*Phi_N = g yields a^{-1} = u/g. */
inline CyclotomicNumber invert(const CyclotomicNumber& a)
{
	if (a.is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");

	detail::RatPoly r0 = a.data_->modulus;
	detail::RatPoly r1 = a.residue_;
	detail::poly_trim(r1);
	detail::RatPoly u0;                  // coefficient of a in r0 (= 0)
	detail::RatPoly u1 = {Rational(1)};  // coefficient of a in r1

	while (true) {
		detail::poly_trim(r1);
		if (r1.size() <= 1) break;
		auto [quot, rem] = detail::poly_divmod(r0, r1);
		detail::RatPoly qu = detail::poly_mul(quot, u1);
		detail::RatPoly nu = u0;
		if (nu.size() < qu.size()) nu.resize(qu.size(), Rational());
		for (std::size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
		u0 = std::move(u1);
		u1 = std::move(nu);
		r0 = std::move(r1);
		r1 = std::move(rem);
	}
	if (r1.empty())
		throw Error("cyclotomic invert: residue shares a factor with the modulus");

	const Rational g_inv = r1[0].inverse();
	detail::RatPoly res =
		detail::poly_divmod(std::move(u1), a.data_->modulus).second;
	res.resize(static_cast<std::size_t>(a.data_->degree), Rational());
	for (Rational& c : res) c *= g_inv;
	return CyclotomicNumber(a.data_, std::move(res));
}

/* The constant entry of a residue that carries no higher powers of the
 * root; anything else signals a failed symmetrization upstream. */
inline Rational rational_part(const CyclotomicNumber& a)
{
	const auto& res = a.residue();
	for (std::size_t i = 1; i < res.size(); ++i)
		if (!res[i].is_zero())
			throw NonRationalValue("cyclotomic number has a nonzero non-rational part");
	return res.empty() ? Rational() : res[0];
}

/* Coefficient-ring handle for series over Q(zeta_N). Copies share one
 * immutable field description. */
class CyclotomicField {
  public:
	using Element = CyclotomicNumber;

	explicit CyclotomicField(int order) : data_(detail::CyclotomicFieldData::get(order)) {}

	int order() const { return data_->order; }
	int degree() const { return data_->degree; }
	const CyclotomicPolynomial modulus() const
	{
		return CyclotomicPolynomial{data_->order, data_->modulus};
	}

	Element zero() const
	{
		return Element(data_, std::vector<Rational>(static_cast<std::size_t>(data_->degree)));
	}

	Element one() const { return from_rational(Rational(1)); }
	Element from_int(long n) const { return from_rational(Rational(n)); }

	Element from_rational(const Rational& r) const
	{
		std::vector<Rational> res(static_cast<std::size_t>(data_->degree));
		res[0] = r;
		return Element(data_, std::move(res));
	}

	/* Element with the given residue entries (length phi(N)). */
	Element from_residue(std::vector<Rational> residue) const
	{
		if (residue.size() != static_cast<std::size_t>(data_->degree))
			throw std::invalid_argument("from_residue: need exactly phi(N) entries");
		return Element(data_, std::move(residue));
	}

	/* zeta_N^k with the exponent reduced mod N first. */
	Element zeta(long k) const
	{
		long r = k % data_->order;
		if (r < 0) r += data_->order;
		return Element(data_, data_->zeta_pow[static_cast<std::size_t>(r)]);
	}

	bool is_zero(const Element& a) const { return a.is_zero(); }
	bool is_one(const Element& a) const { return a == one(); }

	Element invert(const Element& a) const { return qacs::invert(a); }

	/* Rendered as a polynomial in z = zeta_N, e.g. "1/2 - z^2". */
	std::string to_string(const Element& a) const
	{
		const auto& res = a.residue();
		std::ostringstream out;
		bool first = true;
		for (std::size_t i = 0; i < res.size(); ++i) {
			if (res[i].is_zero()) continue;
			Rational c = res[i];
			if (first) {
				if (c.sign() < 0) { out << "-"; c = -c; }
			} else {
				out << (c.sign() < 0 ? " - " : " + ");
				if (c.sign() < 0) c = -c;
			}
			first = false;
			if (i == 0) {
				out << c.str();
			} else {
				if (!c.is_one()) out << c.str() << "*";
				out << "z";
				if (i > 1) out << "^" << i;
			}
		}
		if (first) out << "0";
		return out.str();
	}

	friend bool operator==(const CyclotomicField& a, const CyclotomicField& b)
	{
		return a.data_->order == b.data_->order;
	}
	friend bool operator!=(const CyclotomicField& a, const CyclotomicField& b) { return !(a == b); }

  private:
	std::shared_ptr<const detail::CyclotomicFieldData> data_;
};

/* zeta_N^k as a standalone value. */
inline CyclotomicNumber zeta_power(int n, long k) { return CyclotomicField(n).zeta(k); }

} // namespace qacs

#endif

#include "avgord/criterion.hpp"

namespace avgord {

namespace {

using u128 = unsigned __int128;

std::uint64_t to_u64(u128 v) {
  if (v > static_cast<u128>(UINT64_MAX)) throw OverflowError("group order overflows 64 bits");
  return static_cast<std::uint64_t>(v);
}

u128 ipow(u128 base, int exp) {
  u128 out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Orders of the classical families, computed rather than transcribed so the
// prime-set invariant below can cross-check them.
std::uint64_t psl_order(int n, std::uint64_t q) {
  u128 out = ipow(q, n * (n - 1) / 2);
  for (int i = 2; i <= n; ++i) out *= ipow(q, i) - 1;
  return to_u64(out / gcd_u64(static_cast<std::uint64_t>(n), q - 1));
}

std::uint64_t psu_order(int n, std::uint64_t q) {
  u128 out = ipow(q, n * (n - 1) / 2);
  for (int i = 2; i <= n; ++i) {
    u128 qi = ipow(q, i);
    out *= (i % 2 == 0) ? qi - 1 : qi + 1;
  }
  return to_u64(out / gcd_u64(static_cast<std::uint64_t>(n), q + 1));
}

std::uint64_t psp_order(int two_k, std::uint64_t q) {
  int k = two_k / 2;
  u128 out = ipow(q, k * k);
  for (int i = 1; i <= k; ++i) out *= ipow(q, 2 * i) - 1;
  return to_u64(out / gcd_u64(2, q - 1));
}

// O_{2k+1}(q) has the same order as S_{2k}(q).
std::uint64_t omega_odd_order(int two_k_plus_1, std::uint64_t q) {
  return psp_order(two_k_plus_1 - 1, q);
}

std::uint64_t d4_plus_order(std::uint64_t q) {  // O8+(q)
  u128 out = ipow(q, 12) * (ipow(q, 4) - 1);
  for (int i = 1; i <= 3; ++i) out *= ipow(q, 2 * i) - 1;
  return to_u64(out / gcd_u64(4, to_u64(ipow(q, 4) - 1)));
}

std::uint64_t g2_order(std::uint64_t q) {
  return to_u64(ipow(q, 6) * (ipow(q, 6) - 1) * (ipow(q, 2) - 1));
}

std::uint64_t triality_d4_order(std::uint64_t q) {  // 3D4(q)
  return to_u64(ipow(q, 12) * (ipow(q, 8) + ipow(q, 4) + 1) * (ipow(q, 6) - 1) *
                (ipow(q, 2) - 1));
}

std::uint64_t suzuki_order(std::uint64_t q) {  // Sz(q), q = 2^(2m+1)
  return to_u64(ipow(q, 2) * (ipow(q, 2) + 1) * (q - 1));
}

std::uint64_t alternating_order(int n) {
  u128 out = 1;
  for (int i = 3; i <= n; ++i) out *= static_cast<u128>(i);
  return to_u64(out);
}

// Prime set of n, required to factor completely over {2,3,5,7,11,13}.
std::vector<int> prime_set(std::uint64_t n) {
  std::vector<int> out;
  for (int p : {2, 3, 5, 7, 11, 13}) {
    if (n % static_cast<std::uint64_t>(p) == 0) {
      out.push_back(p);
      while (n % static_cast<std::uint64_t>(p) == 0) n /= static_cast<std::uint64_t>(p);
    }
  }
  if (n != 1)
    throw DomainError("registry order has a prime divisor outside {2,3,5,7,11,13}");
  return out;
}

SimpleListEntry fixed(int pi, std::string name, std::uint64_t order) {
  SimpleListEntry e;
  e.pi_size = pi;
  e.name = std::move(name);
  e.order = order;
  e.primes = prime_set(order);
  if (static_cast<int>(e.primes.size()) != pi)
    throw DomainError("registry entry " + e.name + " has the wrong prime count");
  return e;
}

SimpleListEntry parametric(int pi, std::string name, std::string constraint) {
  SimpleListEntry e;
  e.pi_size = pi;
  e.name = std::move(name);
  e.parametric = true;
  e.constraint = std::move(constraint);
  return e;
}

std::vector<SimpleListEntry> build_registry() {
  std::vector<SimpleListEntry> all;

  // |Pi(G)| = 3
  all.push_back(fixed(3, "A5", alternating_order(5)));
  all.push_back(fixed(3, "A6", alternating_order(6)));
  all.push_back(fixed(3, "S4(3) ~ U4(2)", psp_order(4, 3)));
  all.push_back(fixed(3, "L2(7)", psl_order(2, 7)));
  all.push_back(fixed(3, "L2(8)", psl_order(2, 8)));
  all.push_back(fixed(3, "L3(3)", psl_order(3, 3)));
  all.push_back(fixed(3, "U3(3)", psu_order(3, 3)));

  // |Pi(G)| = 4
  all.push_back(parametric(4, "L2(q)", "q a prime, |pi(q^2-1)| = 3"));
  all.push_back(parametric(4, "L2(2^m)", "2^m-1 = u, 2^m+1 = 3t, u and t primes, t > 3"));
  all.push_back(parametric(4, "L2(3^m)", "3^m-1 = 2u, 3^m+1 = 4t, u and t primes"));
  all.push_back(fixed(4, "L2(25)", psl_order(2, 25)));
  all.push_back(fixed(4, "L2(49)", psl_order(2, 49)));
  all.push_back(fixed(4, "L3(4)", psl_order(3, 4)));
  all.push_back(fixed(4, "L4(3)", psl_order(4, 3)));
  all.push_back(fixed(4, "U3(4)", psu_order(3, 4)));
  all.push_back(fixed(4, "U3(5)", psu_order(3, 5)));
  all.push_back(fixed(4, "U4(3)", psu_order(4, 3)));
  all.push_back(fixed(4, "U5(2)", psu_order(5, 2)));
  all.push_back(fixed(4, "S4(5)", psp_order(4, 5)));
  all.push_back(fixed(4, "S4(7)", psp_order(4, 7)));
  all.push_back(fixed(4, "S6(2)", psp_order(6, 2)));
  all.push_back(fixed(4, "O8+(2)", d4_plus_order(2)));
  all.push_back(fixed(4, "G2(3)", g2_order(3)));
  all.push_back(fixed(4, "3D4(2)", triality_d4_order(2)));
  all.push_back(fixed(4, "2F4(2)'", 17971200));
  all.push_back(fixed(4, "Sz(8)", suzuki_order(8)));
  all.push_back(fixed(4, "A7", alternating_order(7)));
  all.push_back(fixed(4, "A8", alternating_order(8)));
  all.push_back(fixed(4, "A9", alternating_order(9)));
  all.push_back(fixed(4, "A10", alternating_order(10)));
  all.push_back(fixed(4, "M11", 7920));
  all.push_back(fixed(4, "M12", 95040));
  all.push_back(fixed(4, "J2", 604800));

  // |Pi(G)| = 5
  all.push_back(parametric(5, "L2(q)", "q a prime power, |pi(q^2-1)| = 4"));
  all.push_back(parametric(5, "L3(q)", "q a prime power, |pi((q^2-1)(q^3-1))| = 4"));
  all.push_back(parametric(5, "U3(q)", "q a prime power, |pi((q^2-1)(q^3+1))| = 4"));
  all.push_back(parametric(5, "O5(q) ~ S4(q)", "q a prime power, |pi(q^4-1)| = 4"));
  all.push_back(parametric(5, "Sz(2^(2m+1))", "|pi((2^(2m+1)-1)(2^(4m+2)+1))| = 4"));
  all.push_back(parametric(5, "R(q)", "q = 3^(2m+1), |pi(q^2-1)| = 3 and |pi(q^2-q+1)| = 1"));
  all.push_back(fixed(5, "L5(3)", psl_order(5, 3)));
  all.push_back(fixed(5, "S6(3)", psp_order(6, 3)));
  all.push_back(fixed(5, "U4(5)", psu_order(4, 5)));
  all.push_back(fixed(5, "U6(2)", psu_order(6, 2)));
  all.push_back(fixed(5, "O7(3)", omega_odd_order(7, 3)));
  all.push_back(fixed(5, "O8+(3)", d4_plus_order(3)));
  all.push_back(fixed(5, "G2(4)", g2_order(4)));
  all.push_back(fixed(5, "A11", alternating_order(11)));
  all.push_back(fixed(5, "A12", alternating_order(12)));
  all.push_back(fixed(5, "M22", 443520));
  all.push_back(fixed(5, "HS", 44352000));
  all.push_back(fixed(5, "McL", 898128000));

  // |Pi(G)| = 6
  all.push_back(parametric(6, "L2(q)", "q a prime power, |pi(q^2-1)| = 5"));
  all.push_back(parametric(6, "L3(q)", "q a prime power, |pi((q^2-1)(q^3-1))| = 5"));
  all.push_back(parametric(6, "L4(q)", "q a prime power, |pi((q^2-1)(q^3-1)(q^4-1))| = 5"));
  all.push_back(parametric(6, "U3(q)", "q a prime power, |pi((q^2-1)(q^3+1))| = 5"));
  all.push_back(parametric(6, "U4(q)", "q a prime power, |pi((q^2-1)(q^3+1)(q^4-1))| = 5"));
  all.push_back(parametric(6, "O5(q) ~ S4(q)", "q a prime power, |pi(q^4-1)| = 5"));
  all.push_back(parametric(6, "G2(q)", "q a prime power, |pi(q^6-1)| = 5"));
  all.push_back(parametric(6, "Sz(2^(2m+1))", "|pi((2^(2m+1)-1)(2^(4m+2)+1))| = 5"));
  all.push_back(parametric(6, "R(3^(2m+1))", "|pi((3^(2m+1)-1)(3^(6m+3)+1))| = 5"));
  all.push_back(fixed(6, "L6(3)", psl_order(6, 3)));
  all.push_back(fixed(6, "A13", alternating_order(13)));
  all.push_back(fixed(6, "A14", alternating_order(14)));
  all.push_back(fixed(6, "A15", alternating_order(15)));
  all.push_back(fixed(6, "A16", alternating_order(16)));
  all.push_back(fixed(6, "Suz", 448345497600));
  all.push_back(fixed(6, "Fi22", 64561751654400));

  return all;
}

}  // namespace

std::vector<SimpleListEntry> our_simple_list(int pi_size) {
  if (pi_size < 3 || pi_size > 6)
    throw DomainError("|Pi(G)| of a non-abelian simple group here is between 3 and 6");
  static const std::vector<SimpleListEntry> registry = build_registry();
  std::vector<SimpleListEntry> out;
  for (const SimpleListEntry& e : registry)
    if (e.pi_size == pi_size) out.push_back(e);
  return out;
}

std::vector<std::string> enumerable_simple_list_members() {
  return {"A6", "PSL(2,7)", "PSL(2,8)", "PSL(2,11)", "PSL(2,13)"};
}

}  // namespace avgord

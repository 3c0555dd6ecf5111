#include "demazure/verify.hpp"

#include "demazure/bench.hpp"
#include "demazure/hopping.hpp"
#include "demazure/oracle.hpp"
#include "demazure/text.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>

namespace demazure {

namespace {

std::mt19937_64 suite_rng(std::uint64_t seed, int n, std::uint64_t tag) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(tag)};
    return std::mt19937_64(seq);
}

SignedPermutation product_b(SignedProduct product, const SignedPermutation& w,
                            const SignedPermutation& v) {
    return product == SignedProduct::Hopping ? star_b(w, v) : demazure_star_b_unfolded(w, v);
}

const char* product_name(SignedProduct product) {
    return product == SignedProduct::Hopping ? "hopping" : "unfolded";
}

bool in_range(IndexRange range, int i, int t) {
    switch (range) {
    case IndexRange::AtOrAbove: return i >= t;
    case IndexRange::Above: return i > t;
    case IndexRange::Equal: return i == t;
    }
    return false;
}

const char* range_name(IndexRange range) {
    switch (range) {
    case IndexRange::AtOrAbove: return ">=";
    case IndexRange::Above: return ">";
    case IndexRange::Equal: return "==";
    }
    return "?";
}

std::vector<int> iota_values(int lo, int hi) {
    std::vector<int> out;
    for (int k = lo; k <= hi; ++k) out.push_back(k);
    return out;
}

std::vector<int> signed_alphabet(int n) {
    std::vector<int> out;
    for (int k = 1; k <= n; ++k) {
        out.push_back(k);
        out.push_back(-k);
    }
    return out;
}

void extend_lists(const std::vector<int>& alphabet, int max_len, std::vector<int>& current,
                  std::vector<char>& used, std::vector<std::vector<int>>& out) {
    out.push_back(current);
    if (static_cast<int>(current.size()) == max_len) return;
    for (std::size_t k = 0; k < alphabet.size(); ++k) {
        if (used[k]) continue;
        used[k] = 1;
        current.push_back(alphabet[k]);
        extend_lists(alphabet, max_len, current, used, out);
        current.pop_back();
        used[k] = 0;
    }
}

template <class Elem, class Prod, class Format>
void check_pair(SuiteResult& r, const Elem& w, const Elem& v, Prod fast, Prod slow, Format fmt) {
    ++r.checked;
    const auto a = fast(w, v);
    const auto b = slow(w, v);
    if (!(a == b)) r.fail(fmt(w) + " * " + fmt(v) + ": " + fmt(a) + " vs oracle " + fmt(b));
}

std::string fmt_a(const Permutation& w) { return format_permutation(w); }
std::string fmt_b(const SignedPermutation& w) { return format_signed(w); }

std::string n_label(const char* what, int n) { return std::string(what) + std::to_string(n); }

} // namespace

std::vector<std::vector<int>> ordered_lists(const std::vector<int>& alphabet, int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::vector<char> used(alphabet.size(), 0);
    extend_lists(alphabet, max_len, current, used, out);
    return out;
}

SuiteResult check_oracle_exhaustive_a(int n) {
    SuiteResult r{n_label("oracle A exhaustive S_", n)};
    const auto all = all_permutations(n);
    for (const auto& w : all) {
        for (const auto& v : all) check_pair(r, w, v, star, demazure_oracle, fmt_a);
    }
    return r;
}

SuiteResult check_oracle_sampled_a(int n, int samples, std::uint64_t seed) {
    SuiteResult r{n_label("oracle A sampled S_", n)};
    auto rng = suite_rng(seed, n, 1);
    for (int k = 0; k < samples; ++k) {
        const auto w = random_permutation(n, rng);
        const auto v = random_permutation(n, rng);
        check_pair(r, w, v, star, demazure_oracle, fmt_a);
    }
    return r;
}

SuiteResult check_oracle_exhaustive_b(int n, SignedProduct product) {
    SuiteResult r{n_label("oracle B exhaustive B_", n) + " (" + product_name(product) + ")"};
    const auto all = all_signed_permutations(n);
    for (const auto& w : all) {
        for (const auto& v : all) {
            ++r.checked;
            const auto a = product_b(product, w, v);
            const auto b = demazure_oracle_b(w, v);
            if (!(a == b)) r.fail(fmt_b(w) + " * " + fmt_b(v) + ": " + fmt_b(a) + " vs oracle " + fmt_b(b));
        }
    }
    return r;
}

SuiteResult check_oracle_sampled_b(int n, int samples, std::uint64_t seed, SignedProduct product) {
    SuiteResult r{std::string("oracle B sampled B_") + std::to_string(n) + " (" + product_name(product) + ")"};
    auto rng = suite_rng(seed, n, 2);
    for (int k = 0; k < samples; ++k) {
        const auto w = random_signed_permutation(n, rng);
        const auto v = random_signed_permutation(n, rng);
        ++r.checked;
        const auto a = product_b(product, w, v);
        const auto b = demazure_oracle_b(w, v);
        if (!(a == b)) r.fail(fmt_b(w) + " * " + fmt_b(v) + ": " + fmt_b(a) + " vs oracle " + fmt_b(b));
    }
    return r;
}

SuiteResult check_interval_product_exhaustive(int n) {
    SuiteResult r{n_label("interval product S_", n)};
    const auto all = all_permutations(n);
    for (const auto& w : all) {
        for (const auto& u : all) {
            ++r.checked;
            if (!verify_interval_product(w, u)) r.fail(fmt_a(w) + ", " + fmt_a(u));
        }
    }
    return r;
}

namespace {

// g h_{t,L}(w) == h_{t,g(L)}(g w) for one generator-like element g.
void commutation_case_a(SuiteResult& r, const Permutation& g, const std::string& g_name,
                        const Permutation& w, int t, const HopList& list) {
    ++r.checked;
    const auto lhs = compose(g, hop(w, t, list).word);
    const auto rhs = hop(compose(g, w), t, apply_to_list(g, list)).word;
    if (!(lhs == rhs)) {
        r.fail(g_name + " w=" + fmt_a(w) + " t=" + std::to_string(t) + " L=" +
               format_list(list.values()) + ": " + fmt_a(lhs) + " vs " + fmt_a(rhs));
    }
}

void commutation_case_b(SuiteResult& r, const SignedPermutation& g, const std::string& g_name,
                        const SignedPermutation& w, int t, const HopList& list) {
    ++r.checked;
    const auto lhs = compose_b(g, hop_b(w, t, list).word);
    const auto rhs = hop_b(compose_b(g, w), t, apply_to_list_b(g, list)).word;
    if (!(lhs == rhs)) {
        r.fail(g_name + " w=" + fmt_b(w) + " t=" + std::to_string(t) + " L=" +
               format_list(list.values()) + ": " + fmt_b(lhs) + " vs " + fmt_b(rhs));
    }
}

std::vector<HopList> hop_lists(std::vector<int> alphabet, int t, int max_len) {
    std::erase(alphabet, t);
    std::vector<HopList> out;
    for (auto& l : ordered_lists(alphabet, max_len)) out.emplace_back(std::move(l));
    return out;
}

std::string string_name(const char* prefix, int a, int b) {
    return std::string(prefix) + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace

SuiteResult check_commutation_a(int n, int max_len, IndexRange range) {
    SuiteResult r{std::string("commutation A s_i, i ") + range_name(range) + " t, S_" + std::to_string(n)};
    for (const auto& w : all_permutations(n)) {
        for (int t = 1; t <= n; ++t) {
            const auto lists = hop_lists(iota_values(1, n), t, max_len);
            for (int i = 1; i < n; ++i) {
                if (!in_range(range, i, t)) continue;
                const auto g = simple(i, n);
                for (const auto& list : lists) commutation_case_a(r, g, "s_" + std::to_string(i), w, t, list);
            }
        }
    }
    return r;
}

SuiteResult check_string_commutation_a(int n, int max_len, IndexRange range) {
    SuiteResult r{std::string("commutation A c(a,b), a ") + range_name(range) + " t, S_" +
                  std::to_string(n)};
    for (const auto& w : all_permutations(n)) {
        for (int t = 1; t <= n; ++t) {
            const auto lists = hop_lists(iota_values(1, n), t, max_len);
            for (int a = 1; a < n; ++a) {
                if (!in_range(range, a, t)) continue;
                for (int b = 1; b <= n - a; ++b) {
                    const auto g = string_generator(a, b, n);
                    for (const auto& list : lists) commutation_case_a(r, g, string_name("c(", a, b), w, t, list);
                }
            }
        }
    }
    return r;
}

SuiteResult check_commutation_b(int n, int max_len, IndexRange range) {
    SuiteResult r{std::string("commutation B s_i, i ") + range_name(range) + " t, B_" + std::to_string(n)};
    for (const auto& w : all_signed_permutations(n)) {
        for (int t = 1; t <= n; ++t) {
            const auto lists = hop_lists(signed_alphabet(n), t, max_len);
            for (int i = 1; i <= n; ++i) {
                if (!in_range(range, i, t)) continue;
                const auto g = simple_b(i, n);
                for (const auto& list : lists) commutation_case_b(r, g, "s_" + std::to_string(i), w, t, list);
            }
        }
    }
    return r;
}

SuiteResult check_string_commutation_b(int n, int max_len, IndexRange range, bool generators_above_t) {
    SuiteResult r{std::string("commutation B cB(a,b), a ") + range_name(range) + " t" +
                  (generators_above_t ? ", all generators > t" : "") + ", B_" + std::to_string(n)};
    for (const auto& w : all_signed_permutations(n)) {
        for (int t = 1; t <= n; ++t) {
            const auto lists = hop_lists(signed_alphabet(n), t, max_len);
            for (int a = 1; a <= n; ++a) {
                if (!in_range(range, a, t)) continue;
                for (int b = 1; b <= 2 * n - a; ++b) {
                    if (generators_above_t) {
                        bool above = true;
                        for (int k = a; k < a + b; ++k) above = above && normalize_generator(k, n) > t;
                        if (!above) continue;
                    }
                    const auto g = string_generator_b(a, b, n);
                    for (const auto& list : lists) {
                        commutation_case_b(r, g, string_name("cB(", a, b), w, t, list);
                    }
                }
            }
        }
    }
    return r;
}

SuiteResult check_associativity_a(int n, int samples, std::uint64_t seed) {
    SuiteResult r{n_label("associativity S_", n)};
    auto rng = suite_rng(seed, n, 3);
    for (int k = 0; k < samples; ++k) {
        const auto x = random_permutation(n, rng);
        const auto y = random_permutation(n, rng);
        const auto z = random_permutation(n, rng);
        ++r.checked;
        const auto lhs = star(star(x, y), z);
        const auto rhs = star(x, star(y, z));
        if (!(lhs == rhs)) {
            r.fail("(" + fmt_a(x) + ", " + fmt_a(y) + ", " + fmt_a(z) + "): " + fmt_a(lhs) + " vs " + fmt_a(rhs));
        }
    }
    return r;
}

SuiteResult check_associativity_b(int n, int samples, std::uint64_t seed, SignedProduct product) {
    SuiteResult r{std::string("associativity B_") + std::to_string(n) + " (" + product_name(product) + ")"};
    auto rng = suite_rng(seed, n, 4);
    for (int k = 0; k < samples; ++k) {
        const auto x = random_signed_permutation(n, rng);
        const auto y = random_signed_permutation(n, rng);
        const auto z = random_signed_permutation(n, rng);
        ++r.checked;
        const auto lhs = product_b(product, product_b(product, x, y), z);
        const auto rhs = product_b(product, x, product_b(product, y, z));
        if (!(lhs == rhs)) {
            r.fail("(" + fmt_b(x) + ", " + fmt_b(y) + ", " + fmt_b(z) + "): " + fmt_b(lhs) + " vs " + fmt_b(rhs));
        }
    }
    return r;
}

SuiteResult check_identity_laws_a(int n) {
    SuiteResult r{n_label("identity laws S_", n)};
    const auto e = identity(n);
    for (const auto& w : all_permutations(n)) {
        ++r.checked;
        if (!(star(e, w) == w) || !(star(w, e) == w)) r.fail(fmt_a(w));
    }
    return r;
}

SuiteResult check_identity_laws_b(int n, SignedProduct product) {
    SuiteResult r{std::string("identity laws B_") + std::to_string(n) + " (" + product_name(product) + ")"};
    const auto e = SignedPermutation::identity(n);
    for (const auto& w : all_signed_permutations(n)) {
        ++r.checked;
        if (!(product_b(product, e, w) == w) || !(product_b(product, w, e) == w)) r.fail(fmt_b(w));
    }
    return r;
}

SuiteResult check_simple_idempotent(int max_rank) {
    SuiteResult r{"s * s = s up to rank " + std::to_string(max_rank)};
    for (int n = 2; n <= max_rank; ++n) {
        for (int i = 1; i < n; ++i) {
            const auto s = simple(i, n);
            ++r.checked;
            if (!(star(s, s) == s)) r.fail("A: s_" + std::to_string(i) + " in S_" + std::to_string(n));
        }
    }
    for (int n = 1; n <= max_rank; ++n) {
        for (int i = 1; i <= n; ++i) {
            const auto s = simple_b(i, n);
            ++r.checked;
            if (!(star_b(s, s) == s)) r.fail("B: s_" + std::to_string(i) + " in B_" + std::to_string(n));
        }
    }
    return r;
}

SuiteResult check_roundtrip_a(int n) {
    SuiteResult r{n_label("round trip A S_", n)};
    for (const auto& w : all_permutations(n)) {
        ++r.checked;
        const auto back = reconstruct(inversion_sequence(w));
        if (!(back == w)) r.fail(fmt_a(w) + " -> " + fmt_a(back));
    }
    return r;
}

namespace {

void roundtrip_case_b(SuiteResult& r, const SignedPermutation& w) {
    ++r.checked;
    const int n = w.rank();
    const auto back = reconstruct_b(inversion_sequence_b(w), n);
    const auto strings = compose_string_generators_b(string_exponents_b(w), n);
    if (!(back == w)) {
        r.fail(fmt_b(w) + " -> " + fmt_b(back));
    } else if (!(strings == w)) {
        r.fail(fmt_b(w) + " -> strings " + fmt_b(strings));
    }
}

} // namespace

SuiteResult check_roundtrip_b_exhaustive(int n) {
    SuiteResult r{n_label("round trip B B_", n)};
    for (const auto& w : all_signed_permutations(n)) roundtrip_case_b(r, w);
    return r;
}

SuiteResult check_roundtrip_b_sampled(int n, int samples, std::uint64_t seed) {
    SuiteResult r{n_label("round trip B sampled B_", n)};
    auto rng = suite_rng(seed, n, 5);
    for (int k = 0; k < samples; ++k) roundtrip_case_b(r, random_signed_permutation(n, rng));
    return r;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& options) {
    std::vector<SuiteResult> out;
    for (int n = 1; n <= 5; ++n) out.push_back(check_oracle_exhaustive_a(n));
    for (int n = 6; n <= 9; ++n) out.push_back(check_oracle_sampled_a(n, options.samples, options.seed));
    for (auto product : {SignedProduct::Hopping, SignedProduct::Unfolded}) {
        for (int n = 1; n <= 3; ++n) out.push_back(check_oracle_exhaustive_b(n, product));
        for (int n = 4; n <= 6; ++n) {
            out.push_back(check_oracle_sampled_b(n, options.samples_b, options.seed, product));
        }
    }
    out.push_back(check_interval_product_exhaustive(4));
    for (auto range : {IndexRange::AtOrAbove, IndexRange::Above}) {
        out.push_back(check_commutation_a(4, 4, range));
        out.push_back(check_string_commutation_a(4, 4, range));
        out.push_back(check_commutation_b(3, 4, range));
        out.push_back(check_string_commutation_b(3, 4, range));
    }
    out.push_back(check_string_commutation_b(3, 4, IndexRange::AtOrAbove, true));
    out.push_back(check_roundtrip_a(6));
    out.push_back(check_roundtrip_b_exhaustive(3));
    out.push_back(check_roundtrip_b_sampled(6, options.samples, options.seed));
    return out;
}

std::string format_suite_table(const std::vector<SuiteResult>& results) {
    std::size_t width = 5;
    for (const auto& r : results) width = std::max(width, r.name.size());
    std::ostringstream out;
    char buf[64];
    auto row = [&](const std::string& name, const std::string& checked, const std::string& failed,
                   const std::string& status, const std::string& example) {
        out << name << std::string(width - name.size() + 2, ' ');
        std::snprintf(buf, sizeof buf, "%10s %8s  %-4s", checked.c_str(), failed.c_str(), status.c_str());
        out << buf;
        if (!example.empty()) out << "  " << example;
        out << '\n';
    };
    row("suite", "checked", "failed", "", "");
    for (const auto& r : results) {
        row(r.name, std::to_string(r.checked), std::to_string(r.failures), r.passed() ? "PASS" : "FAIL",
            r.counterexample);
    }
    return out.str();
}

} // namespace demazure

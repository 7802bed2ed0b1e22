#include "conformal/lie.hpp"

#include <chrono>

#include "conformal/errors.hpp"

namespace conformal {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Human-readable form of a matrix: its unit word when it has one.
std::string describe(const BicMatrix& m, const std::vector<Primitive>& vocab) {
    try {
        return to_string(decompose(m, vocab));
    } catch (const NoMatch&) {
        return to_string(m);
    }
}

void check(VerificationReport& report, const std::vector<Primitive>& vocab,
           std::vector<int> indices, const BicMatrix& actual, const BicMatrix& expected) {
    ++report.checks;
    if (actual == expected) return;
    report.failures.push_back(
        {std::move(indices), describe(expected, vocab), describe(actual, vocab)});
}

} // namespace

nlohmann::json VerificationReport::to_json(bool with_timing) const {
    nlohmann::json doc;
    doc["suite"] = suite;
    doc["checks"] = checks;
    auto fj = nlohmann::json::array();
    for (const auto& f : failures)
        fj.push_back({{"indices", f.indices}, {"expected", f.expected}, {"actual", f.actual}});
    doc["failures"] = fj;
    doc["passed"] = passed();
    if (with_timing) doc["ms"] = ms;
    return doc;
}

VerificationReport verify_metric(const AlgebraLevel& level) {
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "metric(level " + std::to_string(level.level) + ")";

    const MetricTable g = metric(level);
    const int n = level.n;

    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            Rational expected = 0;
            if (mu == nu) {
                if (mu == 0) {
                    expected = 1;
                } else {
                    // e_k squaring to -I contributes +1, to +I contributes -1.
                    const BicMatrix sq =
                        level.generators[static_cast<size_t>(mu) - 1] *
                        level.generators[static_cast<size_t>(mu) - 1];
                    expected = as_scalar(sq) == Bicomplex(-1) ? 1 : -1;
                }
            }
            ++report.checks;
            if (g.g[mu][nu] != expected)
                report.failures.push_back({{mu, nu}, to_string(expected), to_string(g.g[mu][nu])});
        }

    Rational trace = 0;
    for (int mu = 0; mu < n; ++mu) trace += g.g[mu][mu];
    ++report.checks;
    if (trace != Rational(level.sig_plus - level.sig_minus))
        report.failures.push_back(
            {{}, to_string(Rational(level.sig_plus - level.sig_minus)), to_string(trace)});

    report.ms = elapsed_ms(start);
    return report;
}

VerificationReport verify_involutions(const AlgebraLevel& level) {
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "involutions(level " + std::to_string(level.level) + ")";

    const auto vocab = table_vocabulary(level);
    const BicMatrix zero = BicMatrix::zero(level.matrix_dim());
    const int m = static_cast<int>(level.generators.size());

    for (int k = 0; k < m; ++k) {
        const BicMatrix& e = level.generators[static_cast<size_t>(k)];
        check(report, vocab, {k}, bar(e), -e);
        check(report, vocab, {k}, dagger(e), e);
        check(report, vocab, {k}, hat(e), -e);
        for (int l = k + 1; l < m; ++l)
            check(report, vocab, {k, l},
                  e * level.generators[static_cast<size_t>(l)] +
                      level.generators[static_cast<size_t>(l)] * e,
                  zero);
    }

    report.ms = elapsed_ms(start);
    return report;
}

VerificationReport verify_spin(const AlgebraLevel& level) {
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "spin(level " + std::to_string(level.level) + ")";

    const MetricTable g = metric(level);
    const SpinTable sigma = spin_tensor(level);
    const SpinTable s = spin_ops(level);
    const auto vocab = table_vocabulary(level);
    const int n = level.n;
    const Rational two(2);

    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            check(report, vocab, {mu, nu}, sigma.entries[mu][nu], -sigma.entries[nu][mu]);
            check(report, vocab, {mu, nu}, two * s.entries[mu][nu], sigma.entries[mu][nu]);
            // e_mu bar(e_nu) splits into its symmetric and wedge parts.
            check(report, vocab, {mu, nu}, level.basis(mu) * bar(level.basis(nu)),
                  BicMatrix::scalar(level.matrix_dim(), Bicomplex(g.g[mu][nu])) +
                      sigma.entries[mu][nu]);
        }

    report.ms = elapsed_ms(start);
    return report;
}

VerificationReport verify_lorentz(const AlgebraLevel& level) {
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "lorentz(level " + std::to_string(level.level) + ")";

    const MetricTable g = metric(level);
    const SpinTable s = spin_ops(level);
    const auto vocab = table_vocabulary(level);
    const int n = level.n;

    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            for (int rho = 0; rho < n; ++rho)
                for (int si = 0; si < n; ++si) {
                    const BicMatrix lhs =
                        commutator(s.entries[mu][nu], s.entries[rho][si]);
                    const BicMatrix rhs = g.g[nu][rho] * s.entries[mu][si] -
                                          g.g[mu][rho] * s.entries[nu][si] +
                                          g.g[mu][si] * s.entries[nu][rho] -
                                          g.g[nu][si] * s.entries[mu][rho];
                    check(report, vocab, {mu, nu, rho, si}, lhs, rhs);
                }

    report.ms = elapsed_ms(start);
    return report;
}

ConformalGenerators conformal_generators(const AlgebraLevel& base) {
    const AlgebraLevel ambient = compactify(base);
    const int n = base.n;

    ConformalGenerators cg;
    cg.base_n = n;
    cg.ambient_s = spin_ops(ambient);
    const auto& s = cg.ambient_s.entries;
    for (int mu = 0; mu < n; ++mu) {
        cg.p.push_back(-s[mu][n] - s[mu][n + 1]);
        cg.q.push_back(s[mu][n] - s[mu][n + 1]);
    }
    cg.d = s[n][n + 1];
    return cg;
}

VerificationReport verify_conformal(const AlgebraLevel& base) {
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "conformal(base level " + std::to_string(base.level) + ")";

    const AlgebraLevel ambient = compactify(base);
    const ConformalGenerators cg = conformal_generators(base);
    const MetricTable g = metric(base);
    const auto vocab = table_vocabulary(ambient);
    const auto& s = cg.ambient_s.entries;
    const int n = base.n;
    const BicMatrix zero = BicMatrix::zero(ambient.matrix_dim());
    const Rational two(2);

    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            for (int si = 0; si < n; ++si) {
                check(report, vocab, {mu, nu, si}, commutator(s[mu][nu], cg.p[si]),
                      g.g[nu][si] * cg.p[mu] - g.g[mu][si] * cg.p[nu]);
                check(report, vocab, {mu, nu, si}, commutator(s[mu][nu], cg.q[si]),
                      g.g[nu][si] * cg.q[mu] - g.g[mu][si] * cg.q[nu]);
            }

    for (int mu = 0; mu < n; ++mu) {
        check(report, vocab, {mu}, commutator(cg.d, cg.p[mu]), -cg.p[mu]);
        check(report, vocab, {mu}, commutator(cg.d, cg.q[mu]), cg.q[mu]);
        for (int nu = 0; nu < n; ++nu) {
            check(report, vocab, {mu, nu}, commutator(cg.q[mu], cg.p[nu]),
                  two * (g.g[mu][nu] * cg.d + s[mu][nu]));
            // "All other commutators vanish."
            check(report, vocab, {mu, nu}, commutator(cg.p[mu], cg.p[nu]), zero);
            check(report, vocab, {mu, nu}, commutator(cg.q[mu], cg.q[nu]), zero);
            check(report, vocab, {mu, nu}, commutator(cg.d, s[mu][nu]), zero);
        }
    }

    report.ms = elapsed_ms(start);
    return report;
}

VerificationReport reduced_spin(const AlgebraLevel& base) {
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "reduced(base level " + std::to_string(base.level) + ")";

    const AlgebraLevel ambient = compactify(base);
    const MetricTable g = metric(base);
    const SpinTable s = spin_ops(ambient);
    const auto vocab = table_vocabulary(ambient);
    const int n = base.n;

    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            for (int rho = 0; rho < n; ++rho)
                for (int si = 0; si < n; ++si) {
                    const BicMatrix lhs =
                        commutator(s.entries[mu][nu], s.entries[rho][si]);
                    const BicMatrix rhs = g.g[nu][rho] * s.entries[mu][si] -
                                          g.g[mu][rho] * s.entries[nu][si] +
                                          g.g[mu][si] * s.entries[nu][rho] -
                                          g.g[nu][si] * s.entries[mu][rho];
                    check(report, vocab, {mu, nu, rho, si}, lhs, rhs);
                }

    report.ms = elapsed_ms(start);
    return report;
}

namespace {

std::vector<Rational> flatten(const BicMatrix& m) {
    std::vector<Rational> v;
    v.reserve(static_cast<size_t>(m.dim()) * m.dim() * 4);
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) {
            const Bicomplex& x = m.at(r, c);
            v.push_back(x.re);
            v.push_back(x.im_i);
            v.push_back(x.im_j);
            v.push_back(x.im_ij);
        }
    return v;
}

// Incremental exact row echelon basis for span membership tests.
// Rows are kept sorted by pivot column with unit leading entries, so
// a single ascending reduction pass decides membership.
class RationalSpan {
public:
    void add(std::vector<Rational> v) {
        if (reduce(v)) return;
        size_t piv = pivot_of(v);
        const Rational lead = v[piv];
        for (auto& y : v) y /= lead;
        auto pos = rows_.begin();
        while (pos != rows_.end() && pivot_of(*pos) < piv) ++pos;
        rows_.insert(pos, std::move(v));
    }
    bool contains(std::vector<Rational> v) const { return reduce(v); }

private:
    static size_t pivot_of(const std::vector<Rational>& v) {
        size_t piv = 0;
        while (piv < v.size() && v[piv].is_zero()) ++piv;
        return piv;
    }

    // Reduces v against the basis; true when it reduces to zero.
    bool reduce(std::vector<Rational>& v) const {
        for (const auto& row : rows_) {
            const size_t piv = pivot_of(row);
            if (piv < v.size() && !v[piv].is_zero()) {
                const Rational f = v[piv];
                for (size_t k = piv; k < v.size(); ++k) v[k] -= f * row[k];
            }
        }
        return pivot_of(v) == v.size();
    }

    std::vector<std::vector<Rational>> rows_;
};

} // namespace

HomogeneousSplit homogeneous_split(const AlgebraLevel& base) {
    const ConformalGenerators cg = conformal_generators(base);
    const auto& s = cg.ambient_s.entries;
    const int n = base.n;

    HomogeneousSplit split;
    for (int mu = 0; mu < n; ++mu)
        for (int nu = mu + 1; nu < n; ++nu) split.h_basis.push_back(s[mu][nu]);
    for (const auto& q : cg.q) split.h_basis.push_back(q);
    split.h_basis.push_back(cg.d);

    split.g_basis = split.h_basis;
    for (const auto& p : cg.p) split.g_basis.push_back(p);

    RationalSpan span;
    for (const auto& m : split.h_basis) span.add(flatten(m));
    for (size_t a = 0; a < split.h_basis.size(); ++a)
        for (size_t b = a + 1; b < split.h_basis.size(); ++b) {
            const BicMatrix br = commutator(split.h_basis[a], split.h_basis[b]);
            if (!span.contains(flatten(br)))
                throw NotClosed("bracket of h elements " + std::to_string(a) + "," +
                                std::to_string(b) + " leaves the span of h");
        }
    return split;
}

} // namespace conformal

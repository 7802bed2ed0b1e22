#include "conformal/tensors.hpp"

#include <algorithm>
#include <sstream>

#include "conformal/errors.hpp"

#include <nlohmann/json.hpp>

namespace conformal {

Bicomplex real_product(const BicMatrix& a, const BicMatrix& b) {
    const Rational half(1, 2);
    return half * as_scalar(a * bar(b) + b * bar(a));
}

MetricTable metric(const AlgebraLevel& level) {
    MetricTable t;
    t.level = level.level;
    t.g.assign(level.n, std::vector<Rational>(level.n));
    for (int mu = 0; mu < level.n; ++mu) {
        const BicMatrix emu = level.basis(mu);
        for (int nu = mu; nu < level.n; ++nu) {
            Bicomplex g;
            try {
                g = real_product(emu, level.basis(nu));
            } catch (const NotScalar&) {
                throw NotScalar("metric entry (" + std::to_string(mu) + "," +
                                std::to_string(nu) + ") is not scalar");
            }
            if (!g.is_real())
                throw NotScalar("metric entry (" + std::to_string(mu) + "," +
                                std::to_string(nu) + ") is not real");
            t.g[mu][nu] = g.re;
            t.g[nu][mu] = g.re;
        }
    }
    return t;
}

BicMatrix wedge(const BicMatrix& a, const BicMatrix& b) {
    const Rational half(1, 2);
    return half * (a * bar(b) - b * bar(a));
}

SpinTable spin_tensor(const AlgebraLevel& level) {
    SpinTable t;
    t.level = level.level;
    const int n = level.n;
    t.entries.assign(n, std::vector<BicMatrix>(n, BicMatrix::zero(level.matrix_dim())));
    for (int mu = 0; mu < n; ++mu)
        for (int nu = mu + 1; nu < n; ++nu) {
            BicMatrix s = wedge(level.basis(mu), level.basis(nu));
            t.entries[nu][mu] = -s;
            t.entries[mu][nu] = std::move(s);
        }
    return t;
}

SpinTable spin_ops(const AlgebraLevel& level) {
    SpinTable t = spin_tensor(level);
    const Rational half(1, 2);
    for (auto& row : t.entries)
        for (auto& m : row) m = half * m;
    return t;
}

std::string to_string(const UnitWord& w) {
    if (w.sign == 0) return "0";
    std::string out = w.sign < 0 ? "-" : "";
    if (w.factors.empty()) return out + "1";
    for (const auto& f : w.factors) out += f;
    return out;
}

std::vector<Primitive> table_vocabulary(const AlgebraLevel& level, bool unrolled) {
    std::vector<Primitive> vocab;
    const int d = level.matrix_dim();

    if (level.level == 0) {
        vocab.push_back({"e_1", level.generators[0]});
        vocab.push_back({"j", BicMatrix::scalar(d, Bicomplex::unit_j())});
        return vocab;
    }

    vocab.push_back({"i", BicMatrix::scalar(d, Bicomplex::unit_i())});
    vocab.push_back({"j", BicMatrix::scalar(d, Bicomplex::unit_j())});

    if (unrolled) {
        // Block units for every tensor slot, outermost first.
        for (int p = 0; p < level.level; ++p) {
            const int outer = 1 << p;
            const int inner = d / (2 * outer);
            const BicMatrix im = kron(kron(BicMatrix::identity(outer), imath_unit()),
                                      BicMatrix::identity(inner));
            const BicMatrix jm = kron(kron(BicMatrix::identity(outer), jmath_unit()),
                                      BicMatrix::identity(inner));
            const std::string tag = level.level == 1 ? "" : std::to_string(p + 1);
            vocab.push_back({"ı" + tag, im});
            vocab.push_back({"ȷ" + tag, jm});
        }
        return vocab;
    }

    if (level.level == 1) {
        // The lifted level-0 generator is the scalar i itself, so the
        // level-1 table is printed over the level's own generators.
        for (int k = 0; k < 3; ++k)
            vocab.push_back({"e_" + std::to_string(k + 1), level.generators[static_cast<size_t>(k)]});
        return vocab;
    }

    const AlgebraLevel base = make_level(level.level - 1);
    vocab.push_back({"ı", kron(imath_unit(), BicMatrix::identity(d / 2))});
    vocab.push_back({"ȷ", kron(jmath_unit(), BicMatrix::identity(d / 2))});
    for (int k = 0; k + 1 < base.n; ++k)
        vocab.push_back({"e_" + std::to_string(k + 1),
                         kron(BicMatrix::identity(2), base.generators[static_cast<size_t>(k)])});
    return vocab;
}

namespace {

// Lexicographic combinations of a fixed size; returns true when the
// target was matched and fills the word.
bool search(const BicMatrix& m, const BicMatrix& neg, const std::vector<Primitive>& vocab,
            int size, int start, const BicMatrix& prefix, std::vector<int>& picked,
            UnitWord& out) {
    if (size == 0) {
        int sign = 0;
        if (prefix == m)
            sign = 1;
        else if (prefix == neg)
            sign = -1;
        if (sign == 0) return false;
        out.sign = sign;
        out.factors.clear();
        for (int k : picked) out.factors.push_back(vocab[static_cast<size_t>(k)].name);
        return true;
    }
    for (int k = start; k <= static_cast<int>(vocab.size()) - size; ++k) {
        picked.push_back(k);
        if (search(m, neg, vocab, size - 1, k + 1, prefix * vocab[static_cast<size_t>(k)].mat,
                   picked, out))
            return true;
        picked.pop_back();
    }
    return false;
}

} // namespace

UnitWord decompose(const BicMatrix& m, const std::vector<Primitive>& vocab, int cap) {
    if (m.is_zero()) return UnitWord{0, {}};
    for (const auto& p : vocab)
        if (p.mat.dim() != m.dim())
            throw DimensionMismatch("vocabulary dimension does not match matrix");
    const BicMatrix neg = -m;
    const BicMatrix id = BicMatrix::identity(m.dim());
    UnitWord out;
    std::vector<int> picked;
    for (int size = 0; size <= cap; ++size)
        if (search(m, neg, vocab, size, 0, id, picked, out)) return out;
    throw NoMatch("matrix is not a signed unit monomial of length <= " + std::to_string(cap));
}

UnitWord decompose(const BicMatrix& m, const AlgebraLevel& level, int cap) {
    return decompose(m, table_vocabulary(level), cap);
}

std::string render_table(const AlgebraLevel& level, TableFormat format, int cap, bool unrolled) {
    const SpinTable sigma = spin_tensor(level);
    const std::vector<Primitive> vocab = table_vocabulary(level, unrolled);
    const int n = level.n;

    std::vector<std::vector<UnitWord>> words(n, std::vector<UnitWord>(n));
    for (int mu = 0; mu < n; ++mu)
        for (int nu = mu + 1; nu < n; ++nu) {
            words[mu][nu] = decompose(sigma.entries[mu][nu], vocab, cap);
            words[nu][mu] = words[mu][nu];
            words[nu][mu].sign = -words[nu][mu].sign;
        }

    if (format == TableFormat::json) {
        const MetricTable g = metric(level);
        nlohmann::json doc;
        doc["level"] = level.level;
        doc["n"] = n;
        auto gj = nlohmann::json::array();
        for (const auto& row : g.g) {
            auto rj = nlohmann::json::array();
            for (const auto& v : row) rj.push_back(static_cast<int>(to_double(v)));
            gj.push_back(rj);
        }
        doc["metric"] = gj;
        auto sj = nlohmann::json::array();
        for (int mu = 0; mu < n; ++mu) {
            auto rj = nlohmann::json::array();
            for (int nu = 0; nu < n; ++nu)
                rj.push_back({{"sign", words[mu][nu].sign}, {"factors", words[mu][nu].factors}});
            sj.push_back(rj);
        }
        doc["sigma"] = sj;
        return doc.dump(2) + "\n";
    }

    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
    std::vector<size_t> width(n, 0);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            cells[mu][nu] = to_string(words[mu][nu]);
            width[nu] = std::max(width[nu], cells[mu][nu].size());
        }
    std::ostringstream out;
    for (int mu = 0; mu < n; ++mu) {
        out << "[ ";
        for (int nu = 0; nu < n; ++nu) {
            out << cells[mu][nu];
            out << std::string(width[nu] - cells[mu][nu].size(), ' ');
            out << (nu + 1 < n ? "  " : " ");
        }
        out << "]\n";
    }
    return out.str();
}

} // namespace conformal

#include "dinv/randomgen.hpp"

namespace dinv {

QMat random_unimodular(Rng& rng, int n, int ops)
{
    QMat m = QMat::identity(n);
    if (n <= 1)
        return m;
    if (ops <= 0)
        ops = 2 * n;
    for (int k = 0; k < ops; ++k) {
        int kind = rng.below(3);
        int i = rng.below(n);
        int j = rng.below(n);
        if (kind == 0 && i != j) {
            m.swap_rows(i, j);
        } else if (kind == 1) {
            for (int c = 0; c < n; ++c)
                m(i, c) = -m(i, c);
        } else if (i != j) {
            Rat f(rng.below(2) ? 1 : -1);
            for (int c = 0; c < n; ++c)
                m(i, c) += f * m(j, c);
        }
    }
    return m;
}

ChainComplex random_acyclic_complex(Rng& rng, const RandomComplexParams& p)
{
    int degrees = rng.range(2, p.max_degrees);
    std::vector<int> ranks(degrees + 1, 0);  // ranks[i]: identity cone C_i -> C_{i-1}
    for (int i = 1; i < degrees; ++i)
        ranks[i] = rng.range(0, p.max_rank);
    // Keep at least one nonzero summand so the complex is not entirely empty.
    if (degrees >= 2) {
        bool any = false;
        for (int i = 1; i < degrees; ++i)
            any = any || ranks[i] > 0;
        if (!any)
            ranks[1] = 1;
    }

    ChainComplex c;
    c.dims.resize(degrees);
    c.d.resize(degrees);
    for (int i = 0; i < degrees; ++i)
        c.dims[i] = (ranks[i] + ranks[i + 1]) * p.fiber;
    for (int i = 0; i < degrees; ++i) {
        // C_i = F^{ranks[i]} (+) F^{ranks[i+1]}; the first summand maps by the
        // identity onto the second summand of C_{i-1}.
        QMat m(c.dim(i - 1), c.dims[i]);
        if (i >= 1)
            m.set_block(ranks[i - 1] * p.fiber, 0, QMat::identity(ranks[i] * p.fiber));
        c.d[i] = m;
    }

    // Random change of basis per degree.
    std::vector<QMat> base(degrees), base_inv(degrees);
    for (int i = 0; i < degrees; ++i) {
        base[i] = random_unimodular(rng, c.dims[i]);
        base_inv[i] = *inverse(base[i]);
    }
    for (int i = 1; i < degrees; ++i)
        c.d[i] = base[i - 1] * c.d[i] * base_inv[i];
    return c;
}

BlockedComplex random_blocked_complex(uint64_t seed, const RandomComplexParams& p)
{
    Rng rng(seed);
    BlockedComplex bc;
    bc.a = random_acyclic_complex(rng, p);
    bc.b = random_acyclic_complex(rng, p);
    // Pad the shorter part with zero degrees.
    size_t len = std::max(bc.a.dims.size(), bc.b.dims.size());
    auto pad = [&](ChainComplex& c) {
        while (c.dims.size() < len) {
            c.dims.push_back(0);
            c.d.push_back(QMat::zero(c.dims[c.dims.size() - 2], 0));
        }
    };
    pad(bc.a);
    pad(bc.b);

    std::vector<QMat> y(len);
    for (size_t k = 0; k < len; ++k) {
        y[k] = QMat(bc.b.dim(int(k)), bc.a.dim(int(k)));
        for (int i = 0; i < y[k].rows(); ++i)
            for (int j = 0; j < y[k].cols(); ++j)
                y[k](i, j) = rng.range(-2, 2);
    }
    bc.cross.resize(len);
    for (int k = 0; k < int(len); ++k) {
        QMat ylow = (k >= 1) ? y[k - 1] : QMat::zero(bc.b.dim(-1), bc.a.dim(-1));
        bc.cross[k] = bc.b.boundary(k) * y[k] - ylow * bc.a.boundary(k);
    }
    return bc;
}

Propagator random_propagator(Rng& rng, const ChainComplex& c)
{
    int n = int(c.dims.size());
    std::vector<QMat> base(n), base_inv(n);
    for (int i = 0; i < n; ++i) {
        base[i] = random_unimodular(rng, c.dims[i]);
        base_inv[i] = *inverse(base[i]);
    }
    ChainComplex conj = c;
    for (int i = 1; i < n; ++i)
        conj.d[i] = base[i - 1] * c.d[i] * base_inv[i];
    Propagator g = contraction(conj);
    Propagator out;
    out.g.resize(g.g.size());
    out.g[0] = QMat::zero(c.dim(0), 0);
    for (int i = 1; i < int(g.g.size()); ++i)
        out.g[i] = base_inv[i] * g.g[i] * base[i - 1];
    return out;
}

} // namespace dinv

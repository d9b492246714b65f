#include "operjet/chevalley.hpp"

#include <mutex>
#include <sstream>

namespace operjet {

namespace {

// Coefficients c_0 .. c_{N-1} of det(lambda I - M) = lambda^N + sum c_k lambda^k,
// by the Faddeev-LeVerrier recursion.  Works over any commutative ring with
// rational scalar action; exact divisions are by the integers 1..N only.
template <class R>
std::vector<R> charpoly_coeffs(const std::vector<std::vector<R>>& m, const R& zero, const R& one) {
    size_t n = m.size();
    std::vector<std::vector<R>> b(n, std::vector<R>(n, zero));
    for (size_t i = 0; i < n; ++i) b[i][i] = one;
    std::vector<R> c(n + 1, zero);
    c[n] = one;
    for (size_t k = 1; k <= n; ++k) {
        // b <- m * b
        std::vector<std::vector<R>> nb(n, std::vector<R>(n, zero));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                R acc = zero;
                for (size_t l = 0; l < n; ++l) acc = acc + m[i][l] * b[l][j];
                nb[i][j] = acc;
            }
        b = std::move(nb);
        R tr = zero;
        for (size_t i = 0; i < n; ++i) tr = tr + b[i][i];
        R ck = Rational(-1, static_cast<long long>(k)) * tr;
        c[n - k] = ck;
        for (size_t i = 0; i < n; ++i) b[i][i] = b[i][i] + ck;
    }
    c.pop_back();
    return c;  // c_0 .. c_{N-1}
}

}  // namespace

int ChevalleyAlgebra::root_index(int lo, int hi) const {
    auto it = root_lookup_.find({lo, hi});
    if (it == root_lookup_.end()) throw std::invalid_argument("ChevalleyAlgebra: no such root");
    return it->second;
}

int ChevalleyAlgebra::principal_degree(int b) const {
    if (is_e(b)) return roots_[static_cast<size_t>(b)].height();
    if (is_f(b)) return -roots_[static_cast<size_t>(b - num_pos_roots())].height();
    return 0;
}

std::string ChevalleyAlgebra::basis_label(int b) const {
    std::ostringstream os;
    if (is_h(b)) {
        os << "h_" << (b - 2 * num_pos_roots() + 1);
        return os.str();
    }
    const PosRoot& r = roots_[static_cast<size_t>(is_e(b) ? b : b - num_pos_roots())];
    os << (is_e(b) ? "e_" : "f_");
    for (int i = r.lo; i < r.hi; ++i) os << (i + 1);
    return os.str();
}

int ChevalleyAlgebra::label_index(const std::string& label) const {
    for (int b = 0; b < dim_; ++b)
        if (basis_label(b) == label) return b;
    throw std::invalid_argument("ChevalleyAlgebra: unknown basis label '" + label + "'");
}

LieElement ChevalleyAlgebra::basis_element(int b) const {
    LieElement x = zero();
    x[static_cast<size_t>(b)] = 1;
    return x;
}

LieElement ChevalleyAlgebra::bracket(const LieElement& x, const LieElement& y) const {
    LieElement out = zero();
    for (int a = 0; a < dim_; ++a) {
        if (x[static_cast<size_t>(a)] == 0) continue;
        for (int b = 0; b < dim_; ++b) {
            if (y[static_cast<size_t>(b)] == 0) continue;
            Rational c = x[static_cast<size_t>(a)] * y[static_cast<size_t>(b)];
            for (const auto& [idx, coeff] : bracket_table_[static_cast<size_t>(a)][static_cast<size_t>(b)])
                out[static_cast<size_t>(idx)] += c * coeff;
        }
    }
    return out;
}

LieSeries ChevalleyAlgebra::bracket(const LieSeries& x, const LieSeries& y) const {
    return convolve_mul<VecQ>(x, y, [this](const VecQ& a, const VecQ& b) { return bracket(a, b); });
}

LieElement ChevalleyAlgebra::exp_ad(const LieElement& y, const LieElement& x) const {
    LieElement result = x;
    LieElement term = x;
    for (int k = 1; k <= 3 * dim_; ++k) {
        term = bracket(y, term);
        if (is_zero(term)) return result;
        Rational inv_k(1, k);
        LieElement scaled = inv_k * term;
        term = scaled;
        result += term;
    }
    throw std::domain_error("exp_ad: ad y is not nilpotent");
}

Rational ChevalleyAlgebra::killing_form(const LieElement& x, const LieElement& y) const {
    Rational s = 0;
    for (int a = 0; a < dim_; ++a) {
        if (x[static_cast<size_t>(a)] == 0) continue;
        for (int b = 0; b < dim_; ++b)
            if (y[static_cast<size_t>(b)] != 0)
                s += x[static_cast<size_t>(a)] * y[static_cast<size_t>(b)] *
                     killing_gram_[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }
    return s;
}

Rational ChevalleyAlgebra::basic_form(const LieElement& x, const LieElement& y) const {
    Rational s = 0;
    for (int a = 0; a < dim_; ++a) {
        if (x[static_cast<size_t>(a)] == 0) continue;
        for (int b = 0; b < dim_; ++b)
            if (y[static_cast<size_t>(b)] != 0)
                s += x[static_cast<size_t>(a)] * y[static_cast<size_t>(b)] *
                     basic_gram_[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }
    return s;
}

VecQ ChevalleyAlgebra::weight_of_root(int root) const {
    VecQ w(static_cast<size_t>(rank_));
    for (int i = 0; i < rank_; ++i)
        w[static_cast<size_t>(i)] = cartan_matrix_[static_cast<size_t>(i)][static_cast<size_t>(root)];
    return w;
}

VecQ ChevalleyAlgebra::sum_of_positive_roots() const {
    VecQ s(static_cast<size_t>(rank_), Rational(0));
    for (int r = 0; r < num_pos_roots(); ++r) s += weight_of_root(r);
    return s;
}

VecQ ChevalleyAlgebra::w0_weight(const VecQ& coords) const {
    VecQ out(coords.size());
    for (size_t i = 0; i < coords.size(); ++i)
        out[i] = -coords[static_cast<size_t>(dynkin_involution(static_cast<int>(i)))];
    return out;
}

int ChevalleyAlgebra::w0_root(int root) const {
    const PosRoot& r = roots_[static_cast<size_t>(root)];
    return root_index(rank_ - r.hi, rank_ - r.lo);
}

LieElement ChevalleyAlgebra::cartan_embed(const VecQ& coords) const {
    if (static_cast<int>(coords.size()) != rank_)
        throw std::invalid_argument("cartan_embed: wrong coordinate count");
    VecQ gamma = mat_apply(cartan_embed_solver_, coords);
    LieElement x = zero();
    for (int i = 0; i < rank_; ++i) x[static_cast<size_t>(h_index(i))] = gamma[static_cast<size_t>(i)];
    return x;
}

LieElement ChevalleyAlgebra::w0_twist(const LieElement& x) const {
    LieElement out = zero();
    for (int b = 0; b < dim_; ++b) {
        if (x[static_cast<size_t>(b)] == 0) continue;
        const auto& [img, sign] = w0_basis_image_[static_cast<size_t>(b)];
        out[static_cast<size_t>(img)] += sign * x[static_cast<size_t>(b)];
    }
    return out;
}

MatQ ChevalleyAlgebra::matrix_of(const LieElement& x) const {
    size_t n = static_cast<size_t>(rank_ + 1);
    MatQ m(n, VecQ(n, Rational(0)));
    for (int r = 0; r < num_pos_roots(); ++r) {
        const PosRoot& root = roots_[static_cast<size_t>(r)];
        m[static_cast<size_t>(root.lo)][static_cast<size_t>(root.hi)] += x[static_cast<size_t>(e_index(r))];
        m[static_cast<size_t>(root.hi)][static_cast<size_t>(root.lo)] += x[static_cast<size_t>(f_index(r))];
    }
    for (int i = 0; i < rank_; ++i) {
        Rational c = x[static_cast<size_t>(h_index(i))];
        m[static_cast<size_t>(i)][static_cast<size_t>(i)] += c;
        m[static_cast<size_t>(i + 1)][static_cast<size_t>(i + 1)] -= c;
    }
    return m;
}

LieElement ChevalleyAlgebra::from_matrix(const MatQ& m) const {
    LieElement x = zero();
    for (int r = 0; r < rank_ + 1; ++r)
        for (int c = 0; c < rank_ + 1; ++c) {
            if (r == c || m[static_cast<size_t>(r)][static_cast<size_t>(c)] == 0) continue;
            int idx = (r < c) ? e_index(root_index(r, c)) : f_index(root_index(c, r));
            x[static_cast<size_t>(idx)] = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
        }
    Rational partial = 0;
    for (int i = 0; i < rank_; ++i) {
        partial += m[static_cast<size_t>(i)][static_cast<size_t>(i)];
        x[static_cast<size_t>(h_index(i))] = partial;
    }
    return x;
}

VecQ ChevalleyAlgebra::chi_raw(const LieElement& x) const {
    MatQ m = matrix_of(x);
    auto c = charpoly_coeffs<Rational>(m, Rational(0), Rational(1));
    VecQ out(static_cast<size_t>(rank_));
    for (int i = 1; i <= rank_; ++i) out[static_cast<size_t>(i - 1)] = c[static_cast<size_t>(rank_ - i)];
    return out;
}

VecQ ChevalleyAlgebra::chi(const LieElement& x) const {
    VecQ raw = chi_raw(x);
    for (int i = 0; i < rank_; ++i) raw[static_cast<size_t>(i)] *= chi_scale_[static_cast<size_t>(i)];
    return raw;
}

JetInvariantClass ChevalleyAlgebra::chi_jet(const JetPoly<VecQ>& x) const {
    long long n = x.length();
    size_t msize = static_cast<size_t>(rank_ + 1);
    JetQ jzero(n);
    JetQ jone(n);
    jone[0] = 1;
    std::vector<std::vector<JetQ>> m(msize, std::vector<JetQ>(msize, jzero));
    for (long long k = 0; k < n; ++k) {
        MatQ mk = matrix_of(x[static_cast<size_t>(k)].empty() ? zero() : x[static_cast<size_t>(k)]);
        for (size_t r = 0; r < msize; ++r)
            for (size_t c = 0; c < msize; ++c) m[r][c][static_cast<size_t>(k)] = mk[r][c];
    }
    auto cs = charpoly_coeffs<JetQ>(m, jzero, jone);
    JetInvariantClass out;
    out.n = n;
    for (int i = 1; i <= rank_; ++i)
        out.jets.push_back(chi_scale_[static_cast<size_t>(i - 1)] * cs[static_cast<size_t>(rank_ - i)]);
    return out;
}

JetInvariantClass ChevalleyAlgebra::chi_jet_cartan(const JetPoly<VecQ>& weight_jet) const {
    JetPoly<VecQ> lie_jet(weight_jet.length(), zero());
    for (size_t k = 0; k < weight_jet.coeffs.size(); ++k)
        lie_jet[k] = weight_jet[k].empty() ? zero() : cartan_embed(weight_jet[k]);
    return chi_jet(lie_jet);
}

KostantReport ChevalleyAlgebra::kostant_check(const std::vector<VecQ>& sample_coords) const {
    KostantReport rep;
    auto fail = [&rep](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };

    VecQ at_p = chi(triple_.p_minus);
    for (const auto& v : at_p)
        if (v != 0) fail("chi(p_minus) != 0 (regular nilpotent must have vanishing invariants)");

    auto slice_point = [this](const VecQ& c) {
        LieElement x = triple_.p_minus;
        for (int j = 0; j < rank_; ++j)
            x += c[static_cast<size_t>(j)] * vcan_.basis[static_cast<size_t>(j)];
        return x;
    };

    // Unit leading coefficient and triangularity on coordinate directions.
    for (int i = 0; i < rank_; ++i) {
        for (Rational a : {Rational(1), Rational(-3), Rational(5, 2)}) {
            VecQ c(static_cast<size_t>(rank_), Rational(0));
            c[static_cast<size_t>(i)] = a;
            VecQ vals = chi(slice_point(c));
            if (vals[static_cast<size_t>(i)] - at_p[static_cast<size_t>(i)] != a)
                fail("chi_" + std::to_string(i + 1) + " not unit-linear in its own coordinate");
            for (int k = 0; k < i; ++k)
                if (vals[static_cast<size_t>(k)] != at_p[static_cast<size_t>(k)])
                    fail("chi_" + std::to_string(k + 1) + " depends on a higher-degree coordinate");
        }
    }

    // Triangular back-substitution recovers the coordinates: bijectivity on samples.
    for (const auto& c : sample_coords) {
        VecQ vals = chi(slice_point(c));
        VecQ rec(static_cast<size_t>(rank_), Rational(0));
        for (int i = 0; i < rank_; ++i) {
            VecQ partial = rec;
            partial[static_cast<size_t>(i)] = 0;
            VecQ base = chi(slice_point(partial));
            rec[static_cast<size_t>(i)] = vals[static_cast<size_t>(i)] - base[static_cast<size_t>(i)];
        }
        if (rec != c) fail("triangular inversion failed on a sample point");
    }
    return rep;
}

ChevalleyAlgebra ChevalleyAlgebra::build(char type, int rank) {
    if (type != 'A' || rank < 1 || rank > 3)
        throw std::invalid_argument("ChevalleyAlgebra::build: only type A with rank 1..3 is supported");
    ChevalleyAlgebra alg;
    alg.type_ = type;
    alg.rank_ = rank;
    for (int h = 1; h <= rank; ++h)
        for (int lo = 0; lo + h <= rank; ++lo) alg.roots_.push_back({lo, lo + h});
    for (size_t r = 0; r < alg.roots_.size(); ++r)
        alg.root_lookup_[{alg.roots_[r].lo, alg.roots_[r].hi}] = static_cast<int>(r);
    int pos = static_cast<int>(alg.roots_.size());
    alg.dim_ = 2 * pos + rank;

    // Structure constants from the defining representation.
    auto mat_mul = [rank](const MatQ& a, const MatQ& b) {
        size_t n = static_cast<size_t>(rank + 1);
        MatQ m(n, VecQ(n, Rational(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) {
                if (a[i][k] == 0) continue;
                for (size_t j = 0; j < n; ++j) m[i][j] += a[i][k] * b[k][j];
            }
        return m;
    };
    std::vector<MatQ> basis_mats;
    for (int b = 0; b < alg.dim_; ++b) basis_mats.push_back(alg.matrix_of(alg.basis_element(b)));
    alg.bracket_table_.assign(static_cast<size_t>(alg.dim_),
                              std::vector<std::vector<std::pair<int, Rational>>>(
                                  static_cast<size_t>(alg.dim_)));
    for (int a = 0; a < alg.dim_; ++a)
        for (int b = 0; b < alg.dim_; ++b) {
            MatQ ab = mat_mul(basis_mats[static_cast<size_t>(a)], basis_mats[static_cast<size_t>(b)]);
            MatQ ba = mat_mul(basis_mats[static_cast<size_t>(b)], basis_mats[static_cast<size_t>(a)]);
            for (size_t i = 0; i < ab.size(); ++i)
                for (size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
            LieElement br = alg.from_matrix(ab);
            for (int k = 0; k < alg.dim_; ++k)
                if (br[static_cast<size_t>(k)] != 0)
                    alg.bracket_table_[static_cast<size_t>(a)][static_cast<size_t>(b)].push_back(
                        {k, br[static_cast<size_t>(k)]});
        }

    // Cartan matrix from [h_i, e_{alpha_j}] = a_{ij} e_{alpha_j}.
    alg.cartan_matrix_.assign(static_cast<size_t>(rank), VecQ(static_cast<size_t>(alg.roots_.size()), Rational(0)));
    for (int i = 0; i < rank; ++i)
        for (int r = 0; r < pos; ++r) {
            LieElement br = alg.bracket(alg.basis_element(alg.h_index(i)),
                                        alg.basis_element(alg.e_index(r)));
            alg.cartan_matrix_[static_cast<size_t>(i)][static_cast<size_t>(r)] =
                br[static_cast<size_t>(alg.e_index(r))];
        }

    // Killing form and the basic normalization.
    alg.killing_gram_.assign(static_cast<size_t>(alg.dim_), VecQ(static_cast<size_t>(alg.dim_), Rational(0)));
    for (int a = 0; a < alg.dim_; ++a)
        for (int b = a; b < alg.dim_; ++b) {
            Rational tr = 0;
            for (int c = 0; c < alg.dim_; ++c) {
                // coefficient of basis c in [a, [b, c]]
                for (const auto& [mid, cm] : alg.bracket_table_[static_cast<size_t>(b)][static_cast<size_t>(c)])
                    for (const auto& [fin, cf] :
                         alg.bracket_table_[static_cast<size_t>(a)][static_cast<size_t>(mid)])
                        if (fin == c) tr += cm * cf;
            }
            alg.killing_gram_[static_cast<size_t>(a)][static_cast<size_t>(b)] = tr;
            alg.killing_gram_[static_cast<size_t>(b)][static_cast<size_t>(a)] = tr;
        }
    int theta = alg.highest_root_index();
    Rational c0 = alg.killing_gram_[static_cast<size_t>(alg.e_index(theta))]
                                   [static_cast<size_t>(alg.f_index(theta))];
    if (c0 == 0) throw std::domain_error("build: degenerate Killing form");
    alg.basic_gram_ = alg.killing_gram_;
    for (auto& row : alg.basic_gram_)
        for (auto& v : row) v /= c0;
    alg.dual_coxeter_ = c0 / 2;

    MatQ basic_inv = invert_matrix(alg.basic_gram_);
    for (int b = 0; b < alg.dim_; ++b) {
        LieElement dual = alg.zero();
        for (int k = 0; k < alg.dim_; ++k)
            dual[static_cast<size_t>(k)] = basic_inv[static_cast<size_t>(k)][static_cast<size_t>(b)];
        alg.basic_dual_.push_back(std::move(dual));
    }

    // <alpha_j, h_i> over simple roots only, inverted for the h^* -> h bridge.
    MatQ a_t(static_cast<size_t>(rank), VecQ(static_cast<size_t>(rank), Rational(0)));
    for (int j = 0; j < rank; ++j)
        for (int i = 0; i < rank; ++i)
            a_t[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                alg.cartan_matrix_[static_cast<size_t>(i)][static_cast<size_t>(alg.root_index(j, j + 1))];
    alg.cartan_embed_solver_ = invert_matrix(a_t);

    // Principal triple: [sum a_i e_i, sum f_j] = sum a_i h_i must equal 2 rho-check.
    alg.triple_.p_minus = alg.zero();
    for (int i = 0; i < rank; ++i)
        alg.triple_.p_minus[static_cast<size_t>(alg.f_index(alg.root_index(i, i + 1)))] = 1;
    VecQ two_rho(static_cast<size_t>(rank), Rational(2));
    alg.triple_.semisimple = alg.cartan_embed(two_rho);
    alg.triple_.p_plus = alg.zero();
    for (int i = 0; i < rank; ++i)
        alg.triple_.p_plus[static_cast<size_t>(alg.e_index(alg.root_index(i, i + 1)))] =
            alg.triple_.semisimple[static_cast<size_t>(alg.h_index(i))];

    // ker(ad p_plus) inside the nilpotent radical, degree by degree.
    for (int d = 1; d <= rank; ++d) {
        std::vector<int> layer, target;
        for (int r = 0; r < pos; ++r) {
            if (alg.roots_[static_cast<size_t>(r)].height() == d) layer.push_back(alg.e_index(r));
            if (alg.roots_[static_cast<size_t>(r)].height() == d + 1) target.push_back(alg.e_index(r));
        }
        MatQ ad_map(target.size(), VecQ(layer.size(), Rational(0)));
        for (size_t c = 0; c < layer.size(); ++c) {
            LieElement br = alg.bracket(alg.triple_.p_plus, alg.basis_element(layer[c]));
            for (size_t r = 0; r < target.size(); ++r)
                ad_map[r][c] = br[static_cast<size_t>(target[r])];
        }
        std::vector<VecQ> kernel =
            target.empty() ? std::vector<VecQ>{} : nullspace(ad_map);
        if (target.empty())
            for (size_t c = 0; c < layer.size(); ++c) {
                VecQ unit(layer.size(), Rational(0));
                unit[c] = 1;
                kernel.push_back(unit);
            }
        for (const auto& k : kernel) {
            LieElement v = alg.zero();
            for (size_t c = 0; c < layer.size(); ++c) v[static_cast<size_t>(layer[c])] = k[c];
            if (d == 1) {
                v = alg.triple_.p_plus;  // degree-1 generator is p_plus itself
            } else {
                // normalize so the first nonzero coordinate is 1
                for (size_t c = 0; c < v.size(); ++c)
                    if (v[c] != 0) {
                        Rational inv = Rational(1) / v[c];
                        v = inv * v;
                        break;
                    }
            }
            alg.vcan_.degrees.push_back(d);
            alg.vcan_.basis.push_back(v);
            if (d == 1) break;  // single generator in degree one
        }
    }
    if (static_cast<int>(alg.vcan_.basis.size()) != rank)
        throw std::domain_error("build: canonical subspace has wrong dimension");

    // Freeze the invariant normalization: P_i(p_minus + c p_i) = c + lower terms.
    alg.chi_scale_.assign(static_cast<size_t>(rank), Rational(1));
    VecQ raw_base = alg.chi_raw(alg.triple_.p_minus);
    for (int i = 0; i < rank; ++i) {
        LieElement x = alg.triple_.p_minus + alg.vcan_.basis[static_cast<size_t>(i)];
        VecQ raw = alg.chi_raw(x);
        Rational L = raw[static_cast<size_t>(i)] - raw_base[static_cast<size_t>(i)];
        if (L == 0) throw std::domain_error("build: degenerate invariant normalization");
        alg.chi_scale_[static_cast<size_t>(i)] = Rational(1) / L;
    }

    // Longest-element involution: E_{ab} -> (-1)^{a+b} E_{l-a, l-b}.
    for (int b = 0; b < alg.dim_; ++b) {
        if (alg.is_h(b)) {
            int i = b - 2 * pos;
            alg.w0_basis_image_.push_back({alg.h_index(rank - 1 - i), Rational(-1)});
            continue;
        }
        bool e_side = alg.is_e(b);
        const PosRoot& r = alg.roots_[static_cast<size_t>(e_side ? b : b - pos)];
        int image_root = alg.root_index(rank - r.hi, rank - r.lo);
        Rational sign = ((r.lo + r.hi) % 2 == 0) ? 1 : -1;
        alg.w0_basis_image_.push_back(
            {e_side ? alg.f_index(image_root) : alg.e_index(image_root), sign});
    }

    return alg;
}

const ChevalleyAlgebra& algebra(char type, int rank) {
    static std::mutex mu;
    static std::map<std::pair<char, int>, std::unique_ptr<ChevalleyAlgebra>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(type, rank);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<ChevalleyAlgebra>(ChevalleyAlgebra::build(type, rank)))
                 .first;
    return *it->second;
}

}  // namespace operjet

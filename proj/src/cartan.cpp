#include "weylmod/cartan.hpp"

#include <algorithm>

namespace weylmod {

namespace {

void validate_cartan_axioms(int n, const std::vector<int>& c) {
    for (int i = 0; i < n; ++i) {
        if (c[i * n + i] != 2)
            throw InputError("Cartan matrix: diagonal entry c_" + std::to_string(i + 1) +
                             std::to_string(i + 1) + " must be 2, got " +
                             std::to_string(c[i * n + i]));
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int cij = c[i * n + j];
            int cji = c[j * n + i];
            if (cij > 0)
                throw InputError("Cartan matrix: off-diagonal entry c_" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + " must be <= 0, got " +
                                 std::to_string(cij));
            if ((cij == 0) != (cji == 0))
                throw InputError("Cartan matrix: c_" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + " and its transpose must vanish together");
        }
    }
}

} // namespace

CartanData CartanData::from_quiver(int n, std::vector<Arrow> arrows) {
    require(n >= 1, "quiver must have at least one vertex");
    for (const Arrow& a : arrows) {
        require(a.src >= 1 && a.src <= n && a.dst >= 1 && a.dst <= n,
                "arrow " + std::to_string(a.src) + " -> " + std::to_string(a.dst) +
                    " has an endpoint outside 1.." + std::to_string(n));
        require(a.src < a.dst, "arrow " + std::to_string(a.src) + " -> " + std::to_string(a.dst) +
                                   " must go from a smaller to a larger vertex index");
    }
    CartanData d;
    d.n_ = n;
    d.mode_ = CartanMode::Quiver;
    d.arrows_ = std::move(arrows);
    d.c_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) d.c_[i * n + i] = 2;
    for (const Arrow& a : d.arrows_) {
        d.c_[(a.src - 1) * n + (a.dst - 1)] -= 1;
        d.c_[(a.dst - 1) * n + (a.src - 1)] -= 1;
    }
    return d;
}

CartanData CartanData::from_matrix(const std::vector<std::vector<int>>& c) {
    int n = static_cast<int>(c.size());
    require(n >= 1, "Cartan matrix must have at least one row");
    CartanData d;
    d.n_ = n;
    d.mode_ = CartanMode::Valued;
    d.c_.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : c) {
        require(static_cast<int>(row.size()) == n, "Cartan matrix must be square");
        d.c_.insert(d.c_.end(), row.begin(), row.end());
    }
    validate_cartan_axioms(n, d.c_);
    return d;
}

int CartanData::cartan(int i, int j) const {
    require(i >= 1 && i <= n_ && j >= 1 && j <= n_, "Cartan index out of range");
    return c_[(i - 1) * n_ + (j - 1)];
}

int CartanData::quiver_arrows(int i, int j) const {
    require(mode_ == CartanMode::Quiver, "arrow multiplicities exist only for quiver input");
    int count = 0;
    for (const Arrow& a : arrows_)
        if ((a.src == i && a.dst == j) || (a.src == j && a.dst == i)) ++count;
    return count;
}

int CoxeterMatrix::order(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw InputError("Coxeter matrix index out of range");
    return m_[(i - 1) * n_ + (j - 1)];
}

CoxeterMatrix build_coxeter_matrix(const CartanData& cartan) {
    int n = cartan.rank();
    std::vector<int> m(static_cast<size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int entry;
            if (i == j) {
                entry = 1;
            } else {
                long long prod =
                    static_cast<long long>(cartan.cartan(i, j)) * cartan.cartan(j, i);
                if (prod == 0) entry = 2;
                else if (prod == 1) entry = 3;
                else if (prod == 2) entry = 4;
                else if (prod == 3) entry = 6;
                else entry = kInfiniteOrder;
            }
            m[(i - 1) * n + (j - 1)] = entry;
        }
    }
    return CoxeterMatrix(n, std::move(m));
}

void check_index(const CartanData& cartan, int i, const char* what) {
    require(i >= 1 && i <= cartan.rank(),
            std::string(what) + " " + std::to_string(i) + " out of range 1.." +
                std::to_string(cartan.rank()));
}

} // namespace weylmod

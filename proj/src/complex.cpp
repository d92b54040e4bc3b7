#include "conormal/complex.hpp"

#include "conormal/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace conormal {

ConormalComplex::ConormalComplex(std::vector<std::vector<std::string>> bases,
                                 std::vector<IntMatrix> differentials)
    : bases_(std::move(bases)), differentials_(std::move(differentials)) {
    if (bases_.empty()) throw std::invalid_argument("complex needs at least degree 0");
    if (differentials_.size() + 1 != bases_.size())
        throw std::invalid_argument("complex needs one differential per degree 1..d");
    for (std::size_t p = 1; p < bases_.size(); ++p) {
        const IntMatrix& d = differentials_[p - 1];
        if (d.rows() != bases_[p - 1].size() || d.cols() != bases_[p].size())
            throw std::invalid_argument("differential " + std::to_string(p) + " has wrong shape");
    }
}

const std::vector<std::string>& ConormalComplex::basis(int p) const {
    if (p < 0 || p > top_degree()) throw std::out_of_range("degree outside 0..d");
    return bases_[static_cast<std::size_t>(p)];
}

const IntMatrix& ConormalComplex::differential(int p) const {
    if (p < 1 || p > top_degree()) throw std::out_of_range("differential degree outside 1..d");
    return differentials_[static_cast<std::size_t>(p - 1)];
}

IntMatrix ConormalComplex::boundary_map(int p) const {
    if (p >= 1 && p <= top_degree()) return differential(p);
    if (p == 0) return IntMatrix(0, basis_size(0));
    if (p == top_degree() + 1) return IntMatrix(basis_size(top_degree()), 0);
    throw std::out_of_range("boundary map degree outside 0..d+1");
}

std::size_t ConormalComplex::basis_index(int p, const std::string& face_id) const {
    const auto& b = basis(p);
    auto it = std::find(b.begin(), b.end(), face_id);
    if (it == b.end()) throw std::out_of_range("face " + face_id + " not in degree " + std::to_string(p));
    return static_cast<std::size_t>(it - b.begin());
}

int contraction_sign(int i, const IndexSet& index_set) {
    auto it = std::find(index_set.begin(), index_set.end(), i);
    if (it == index_set.end())
        throw std::invalid_argument("contraction_sign: index " + std::to_string(i) + " not in " +
                                    index_set_str(index_set));
    const auto j = (it - index_set.begin()) + 1;  // 1-based place
    return j % 2 == 1 ? 1 : -1;
}

ConormalComplex build_complex(const CornerPoset& poset) {
    require_valid(poset);
    const int d = poset.max_codim();

    std::vector<std::vector<std::string>> bases(d + 1);
    std::unordered_map<std::string, std::pair<int, std::size_t>> position;
    std::unordered_map<std::string, const Face*> face_of;
    for (int p = 0; p <= d; ++p) {
        for (const Face* f : poset.faces_of_codim(p)) {
            position[f->id] = {p, bases[p].size()};
            face_of[f->id] = f;
            bases[p].push_back(f->id);
        }
    }

    std::vector<IntMatrix> diffs;
    diffs.reserve(d);
    for (int p = 1; p <= d; ++p) diffs.emplace_back(bases[p - 1].size(), bases[p].size());

    for (const Adjacency& a : poset.adjacencies()) {
        const Face* f = face_of.at(a.lower);
        const auto [p, col] = position.at(a.lower);
        const auto row = position.at(a.upper).second;
        diffs[p - 1](row, col) = contraction_sign(a.missing_index, f->index_set);
    }

    return ConormalComplex(std::move(bases), std::move(diffs));
}

ChainVector apply_differential(const ChainVector& c, const ConormalComplex& complex) {
    if (c.degree < 1 || c.degree > complex.top_degree())
        throw std::invalid_argument("apply_differential: degree must be in 1..d");
    const IntMatrix& d = complex.differential(c.degree);
    if (c.coefficients.size() != d.cols())
        throw std::invalid_argument("apply_differential: coefficient count does not match basis");

    ChainVector out{c.degree - 1, std::vector<Int>(d.rows())};
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t k = 0; k < d.cols(); ++k)
            if (d(r, k) != 0 && c.coefficients[k] != 0) out.coefficients[r] += d(r, k) * c.coefficients[k];
    return out;
}

ChainVector make_chain(const ConormalComplex& complex, int degree,
                       const std::vector<OrientedGenerator>& generators) {
    ChainVector c{degree, std::vector<Int>(complex.basis_size(degree))};
    for (const OrientedGenerator& g : generators) {
        if (g.sign != 1 && g.sign != -1) throw std::invalid_argument("generator sign must be +1 or -1");
        c.coefficients[complex.basis_index(degree, g.face)] += g.sign;
    }
    return c;
}

bool verify_d_squared(const ConormalComplex& complex) {
    for (int p = 1; p < complex.top_degree(); ++p)
        if (!(complex.differential(p) * complex.differential(p + 1)).is_zero()) return false;
    return true;
}

std::string dump_matrices(const ConormalComplex& complex) {
    std::ostringstream out;
    for (int p = 1; p <= complex.top_degree(); ++p) {
        const IntMatrix& d = complex.differential(p);
        out << "D " << p << " " << d.rows() << " " << d.cols() << "\n";
        out << "rows";
        for (const std::string& id : complex.basis(p - 1)) out << " " << id;
        out << "\ncols";
        for (const std::string& id : complex.basis(p)) out << " " << id;
        out << "\n";
        for (std::size_t r = 0; r < d.rows(); ++r) {
            for (std::size_t c = 0; c < d.cols(); ++c) out << (c ? " " : "") << d(r, c);
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace conormal

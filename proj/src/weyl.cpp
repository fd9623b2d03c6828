#include "syzcert/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace syzcert {

LieType lie_type_from_char(char c) {
    switch (c) {
        case 'A': case 'a': return LieType::A;
        case 'B': case 'b': return LieType::B;
        case 'C': case 'c': return LieType::C;
        case 'D': case 'd': return LieType::D;
        case 'E': case 'e': return LieType::E;
        case 'F': case 'f': return LieType::F;
        case 'G': case 'g': return LieType::G;
        default: throw std::invalid_argument(std::string("unknown Lie type '") + c + "'");
    }
}

char lie_type_to_char(LieType t) {
    switch (t) {
        case LieType::A: return 'A';
        case LieType::B: return 'B';
        case LieType::C: return 'C';
        case LieType::D: return 'D';
        case LieType::E: return 'E';
        case LieType::F: return 'F';
        case LieType::G: return 'G';
    }
    return '?';
}

namespace {

void check_rank(LieType type, int rank) {
    bool ok = false;
    switch (type) {
        case LieType::A: ok = rank >= 1; break;
        case LieType::B: ok = rank >= 2; break;
        case LieType::C: ok = rank >= 2; break;
        case LieType::D: ok = rank >= 3; break;
        case LieType::E: ok = rank >= 6 && rank <= 8; break;
        case LieType::F: ok = rank == 4; break;
        case LieType::G: ok = rank == 2; break;
    }
    if (!ok) {
        throw std::invalid_argument(std::string("unsupported rank for type ") +
                                    lie_type_to_char(type) + ": " + std::to_string(rank));
    }
}

// Minimal positive symmetrizers d_i with d_i C[i][j] = d_j C[j][i].
std::vector<int> symmetrizers(LieType type, int rank) {
    std::vector<int> d(static_cast<std::size_t>(rank), 1);
    switch (type) {
        case LieType::B:  // long roots 1..rank-1, short root last
            std::fill(d.begin(), d.end() - 1, 2);
            break;
        case LieType::C:  // short roots 1..rank-1, long root last
            d.back() = 2;
            break;
        case LieType::F:  // nodes 1,2 long; 3,4 short
            d[0] = d[1] = 2;
            break;
        case LieType::G:  // node 1 short, node 2 long
            d[1] = 3;
            break;
        default:
            break;  // simply laced
    }
    return d;
}

int height(const std::vector<int>& coeffs) {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
}

}  // namespace

std::vector<std::vector<int>> cartan_matrix(LieType type, int rank) {
    check_rank(type, rank);
    const auto r = static_cast<std::size_t>(rank);
    std::vector<std::vector<int>> C(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) C[i][i] = 2;
    auto link = [&](std::size_t i, std::size_t j) { C[i][j] = -1; C[j][i] = -1; };
    switch (type) {
        case LieType::A:
            for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
            break;
        case LieType::B:
            for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
            C[r - 1][r - 2] = -2;  // short root row
            break;
        case LieType::C:
            for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
            C[r - 2][r - 1] = -2;
            break;
        case LieType::D:
            for (std::size_t i = 0; i + 2 < r; ++i) link(i, i + 1);
            link(r - 3, r - 1);
            break;
        case LieType::E:
            // Bourbaki: chain 1-3-4-5-...-rank, node 2 attached to node 4.
            link(0, 2);
            for (std::size_t i = 2; i + 1 < r; ++i) link(i, i + 1);
            link(1, 3);
            break;
        case LieType::F:
            link(0, 1);
            link(1, 2);
            link(2, 3);
            C[2][1] = -2;  // short root row
            break;
        case LieType::G:
            C[0][1] = -3;  // short root row
            C[1][0] = -1;
            break;
    }
    return C;
}

RootTable build_root_table(const RootDatum& rd) {
    check_rank(rd.type, rd.rank);
    if (rd.marked_node < 1 || rd.marked_node > rd.rank) {
        throw std::invalid_argument("marked node out of range 1..rank");
    }
    const auto C = cartan_matrix(rd.type, rd.rank);
    const auto d = symmetrizers(rd.type, rd.rank);
    const auto r = static_cast<std::size_t>(rd.rank);

    // Positive roots by closing root strings upward in height: for a root
    // alpha and simple root i, alpha + alpha_i is a root iff the string
    // length q = p - <alpha, alpha_i^vee> is >= 1, where p counts how far
    // alpha - m alpha_i stays a root.
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> frontier;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<int> simple(r, 0);
        simple[i] = 1;
        known.insert(simple);
        frontier.push_back(std::move(simple));
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& alpha : frontier) {
            for (std::size_t i = 0; i < r; ++i) {
                int pairing = 0;
                for (std::size_t j = 0; j < r; ++j) pairing += C[i][j] * alpha[j];
                int p = 0;
                std::vector<int> down = alpha;
                while (true) {
                    down[i] -= 1;
                    bool nonneg = std::all_of(down.begin(), down.end(),
                                              [](int c) { return c >= 0; });
                    if (!nonneg || !known.count(down)) break;
                    ++p;
                }
                if (p - pairing >= 1) {
                    std::vector<int> up = alpha;
                    up[i] += 1;
                    if (known.insert(up).second) next.push_back(std::move(up));
                }
            }
        }
        frontier = std::move(next);
    }

    std::vector<std::vector<int>> roots(known.begin(), known.end());
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a > b;  // within a height level, earlier simple roots first
    });

    RootTable table;
    table.datum = rd;
    table.roots.reserve(roots.size());
    const std::size_t marked = static_cast<std::size_t>(rd.marked_node - 1);
    for (auto& alpha : roots) {
        // alpha^vee = sum_j e_j alpha_j^vee with e_j = c_j d_j / ((alpha,alpha)/2)
        // and (alpha,alpha)/2 = (1/2) c^T diag(d) C c.
        Int twice_norm = 0;
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                twice_norm += Int(alpha[i]) * d[i] * C[i][j] * alpha[j];
            }
        }
        Int half_norm = twice_norm / 2;
        PositiveRoot root;
        Int rho = 0;
        for (std::size_t j = 0; j < r; ++j) {
            Int num = Int(alpha[j]) * d[j];
            if (num % half_norm != 0) {
                throw std::logic_error("coroot coefficient not integral");
            }
            Int e = num / half_norm;
            rho += e;
            if (j == marked) root.lambda_pairing = static_cast<int>(e);
        }
        root.rho_pairing = static_cast<int>(rho);
        root.simple_coeffs = std::move(alpha);
        table.roots.push_back(std::move(root));
    }
    return table;
}

Polynomial hilbert_homogeneous(const RootTable& rt) {
    Polynomial p = Polynomial::constant(Rational(1));
    for (const auto& root : rt.roots) {
        if (root.lambda_pairing == 0) continue;
        p = p * Polynomial(std::vector<Rational>{
                Rational(1), make_rational(root.lambda_pairing, root.rho_pairing)});
    }
    return p;
}

Polynomial hilbert_homogeneous(const RootDatum& rd) {
    return hilbert_homogeneous(build_root_table(rd));
}

int dim_homogeneous(const RootTable& rt) {
    int count = 0;
    for (const auto& root : rt.roots) {
        if (root.lambda_pairing != 0) ++count;
    }
    return count;
}

int dim_homogeneous(const RootDatum& rd) {
    return dim_homogeneous(build_root_table(rd));
}

std::vector<std::pair<int, int>> factored_form(const RootTable& rt) {
    std::vector<std::pair<int, int>> factors;
    for (const auto& root : rt.roots) {
        if (root.lambda_pairing != 0) {
            factors.emplace_back(root.lambda_pairing, root.rho_pairing);
        }
    }
    return factors;
}

}  // namespace syzcert

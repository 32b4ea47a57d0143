#include "bmt/families.hpp"

#include <stdexcept>

namespace bmt::families {

namespace {

std::string num(const std::string& stem, std::size_t i) { return stem + std::to_string(i); }

}  // namespace

BinaryMatroid graphic(std::size_t num_vertices,
                      const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                      const std::vector<std::string>& labels) {
    if (labels.size() != edges.size())
        throw std::invalid_argument("graphic: one label per edge required");
    if (num_vertices == 0) throw std::invalid_argument("graphic: need at least one vertex");
    if (num_vertices > 65) throw std::invalid_argument("graphic: too many vertices");
    // Incidence matrix over GF(2) with the highest-numbered vertex row dropped.
    Gf2Matrix m(num_vertices - 1, edges.size());
    for (std::size_t j = 0; j < edges.size(); ++j) {
        auto [u, v] = edges[j];
        if (u >= num_vertices || v >= num_vertices)
            throw std::invalid_argument("graphic: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graphic: loops not supported here");
        if (u < num_vertices - 1) m.set(u, j, true);
        if (v < num_vertices - 1) m.set(v, j, true);
    }
    return BinaryMatroid(labels, m);
}

BinaryMatroid graphic(std::size_t num_vertices,
                      const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < edges.size(); ++j) labels.push_back(num("e", j + 1));
    return graphic(num_vertices, edges, labels);
}

BinaryMatroid wheel(std::size_t n) {
    if (n < 2) throw std::invalid_argument("wheel: rank must be at least 2");
    // Hub = vertex n, rim vertices 0..n-1. Spoke xi = hub-rim(i-1), rim
    // edge yi = rim(i-1)-rim(i mod n), so {xi, yi, x(i+1)} is a triangle.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) {
        edges.push_back({n, i - 1});
        labels.push_back(num("x", i));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        edges.push_back({i - 1, i % n});
        labels.push_back(num("y", i));
    }
    return graphic(n + 1, edges, labels);
}

BinaryMatroid m_n(std::size_t n) {
    if (n < 3) throw std::invalid_argument("m_n: n must be at least 3");
    BinaryMatroid w = wheel(n);
    // gamma's column is the GF(2) sum of all spoke columns, so the
    // fundamental circuit over the spoke basis is all spokes plus gamma.
    Gf2Matrix m(w.matrix().rows, w.size() + 1);
    for (std::size_t i = 0; i < w.matrix().rows; ++i) m.bits[i] = w.matrix().bits[i];
    for (std::size_t i = 1; i <= n; ++i) {
        Word col = w.matrix().column(w.index_of(num("x", i)));
        for (std::size_t r = 0; r < m.rows; ++r)
            if ((col >> r) & 1u) m.bits[r] ^= Word(1) << w.size();
    }
    std::vector<std::string> labels = w.labels();
    labels.push_back("gamma");
    return BinaryMatroid(labels, m);
}

BinaryMatroid biwheel(std::size_t n) {
    if (n < 3) throw std::invalid_argument("biwheel: rim must have at least 3 vertices");
    // Rim vertices 0..n-1, hub u = n, hub w = n+1.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) {
        edges.push_back({i - 1, i % n});
        labels.push_back(num("r", i));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        edges.push_back({n, i - 1});
        labels.push_back(num("u", i));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        edges.push_back({n + 1, i - 1});
        labels.push_back(num("w", i));
    }
    return graphic(n + 2, edges, labels);
}

BinaryMatroid biwheel_plus(std::size_t n) {
    if (n < 3) throw std::invalid_argument("biwheel_plus: rim must have at least 3 vertices");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) {
        edges.push_back({i - 1, i % n});
        labels.push_back(num("r", i));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        edges.push_back({n, i - 1});
        labels.push_back(num("u", i));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        edges.push_back({n + 1, i - 1});
        labels.push_back(num("w", i));
    }
    edges.push_back({n, n + 1});
    labels.push_back("z");
    return graphic(n + 2, edges, labels);
}

BinaryMatroid triangular_mobius(std::size_t r) {
    if (r < 3) throw std::invalid_argument("triangular_mobius: rank must be at least 3");
    std::size_t n = r - 1;  // Delta_{n+1} is built from G+_{n+2}
    BinaryMatroid gp = biwheel_plus(n);
    // Delete the rim edge v1 vn (label r<n>, the wrap edge) and adjoin the
    // third element on the line spanned by the columns of w vn and u v1.
    BinaryMatroid base = gp.delete_elements({num("r", n)});
    Word wv_n = base.matrix().column(base.index_of(num("w", n)));
    Word uv_1 = base.matrix().column(base.index_of(num("u", 1)));
    Word q = wv_n ^ uv_1;
    Gf2Matrix m(base.matrix().rows, base.size() + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        m.bits[i] = base.matrix().bits[i];
        if ((q >> i) & 1u) m.bits[i] |= Word(1) << base.size();
    }
    std::vector<std::string> labels = base.labels();
    labels.push_back("q");
    return BinaryMatroid(labels, m);
}

BinaryMatroid triangular_mobius_no_z(std::size_t r) {
    return triangular_mobius(r).delete_elements({std::string("z")});
}

BinaryMatroid cubic_ladder(std::size_t n, bool mobius) {
    if (!mobius) {
        if (n < 3) throw std::invalid_argument("cubic_ladder: need at least 3 rungs");
        // Circular ladder: inner cycle 0..n-1, outer cycle n..2n-1.
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        std::vector<std::string> labels;
        for (std::size_t i = 1; i <= n; ++i) {
            edges.push_back({i - 1, i % n});
            labels.push_back(num("r", i));
        }
        for (std::size_t i = 1; i <= n; ++i) {
            edges.push_back({n + i - 1, n + i % n});
            labels.push_back(num("s", i));
        }
        for (std::size_t i = 1; i <= n; ++i) {
            edges.push_back({i - 1, n + i - 1});
            labels.push_back(num("t", i));
        }
        return graphic(2 * n, edges, labels);
    }
    if (n < 3) throw std::invalid_argument("cubic_ladder: need at least 3 chords");
    // Moebius ladder: 2n-cycle plus the n long chords.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= 2 * n; ++i) {
        edges.push_back({i - 1, i % (2 * n)});
        labels.push_back(num("e", i));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        edges.push_back({i - 1, i - 1 + n});
        labels.push_back(num("f", i));
    }
    return graphic(2 * n, edges, labels);
}

namespace {

// Cycle matroid of the square of an m-cycle: edges e_i = (i, i+1) and
// f_i = (i, i+2), indices mod m.
BinaryMatroid cycle_square(std::size_t m) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
        edges.push_back({i, (i + 1) % m});
        labels.push_back(num("e", i));
    }
    for (std::size_t i = 0; i < m; ++i) {
        edges.push_back({i, (i + 2) % m});
        labels.push_back(num("f", i));
    }
    return graphic(m, edges, labels);
}

}  // namespace

BinaryMatroid quartic_ladder(std::size_t rungs, bool mobius) {
    if (rungs < 3) throw std::invalid_argument("quartic_ladder: need at least 3 rungs");
    return cycle_square(mobius ? 2 * rungs + 1 : 2 * rungs);
}

BinaryMatroid terrahawk() {
    // Cube: top face 0,1,2,3; bottom 4,5,6,7 (i above i+4); apex 8 joined
    // to the top face.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < 4; ++i) {
        edges.push_back({i, (i + 1) % 4});
        labels.push_back(num("t", i + 1));
    }
    for (std::size_t i = 0; i < 4; ++i) {
        edges.push_back({4 + i, 4 + (i + 1) % 4});
        labels.push_back(num("b", i + 1));
    }
    for (std::size_t i = 0; i < 4; ++i) {
        edges.push_back({i, i + 4});
        labels.push_back(num("p", i + 1));
    }
    for (std::size_t i = 0; i < 4; ++i) {
        edges.push_back({8, i});
        labels.push_back(num("a", i + 1));
    }
    return graphic(9, edges, labels);
}

BinaryMatroid fano() {
    Gf2Matrix m = Gf2Matrix::from_strings({
        "1001011",
        "0101101",
        "0010111",
    });
    return BinaryMatroid({"1", "2", "3", "4", "5", "6", "7"}, m);
}

BinaryMatroid k4() {
    return graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                   {"e12", "e13", "e14", "e23", "e24", "e34"});
}

BinaryMatroid k5() {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> labels;
    for (std::size_t u = 0; u < 5; ++u)
        for (std::size_t v = u + 1; v < 5; ++v) {
            edges.push_back({u, v});
            labels.push_back("e" + std::to_string(u + 1) + std::to_string(v + 1));
        }
    return graphic(5, edges, labels);
}

BinaryMatroid k33() {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> labels;
    for (std::size_t u = 0; u < 3; ++u)
        for (std::size_t v = 0; v < 3; ++v) {
            edges.push_back({u, 3 + v});
            labels.push_back("e" + std::to_string(u + 1) + std::to_string(v + 1));
        }
    return graphic(6, edges, labels);
}

BinaryMatroid biwheel_alternating_minor(std::size_t n) {
    if (n % 2 != 0) throw std::invalid_argument("biwheel_alternating_minor: n must be even");
    BinaryMatroid g = biwheel(n);
    std::vector<std::string> del;
    for (std::size_t i = 1; i <= n; ++i) del.push_back(num(i % 2 == 1 ? "u" : "w", i));
    return g.delete_elements(del);
}

}  // namespace bmt::families

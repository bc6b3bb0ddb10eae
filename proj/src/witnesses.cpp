#include "nearopt/witnesses.hpp"

namespace nearopt {

Graph schlafli_complement() {
    // ids: a_i = i-1, b_i = 5+i, c_{ij} (1 <= i < j <= 6) packed after 11.
    int cid[7][7];
    int next = 12;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) cid[i][j] = next++;
    auto a = [](int i) { return i - 1; };
    auto b = [](int i) { return 5 + i; };

    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            if (i != j && a(i) < b(j)) es.emplace_back(a(i), b(j));
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            for (int k = j + 1; k <= 6; ++k)
                if (i == j || i == k) {
                    es.emplace_back(a(i), cid[j][k]);
                    es.emplace_back(b(i), cid[j][k]);
                }
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k)
                for (int l = k + 1; l <= 6; ++l)
                    if (cid[i][j] < cid[k][l] && i != k && i != l && j != k && j != l)
                        es.emplace_back(cid[i][j], cid[k][l]);
    return build_graph(27, es);
}

Graph gstar() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 7; ++i) es.emplace_back(i, (i + 1) % 7);
    for (int v : {0, 1, 3, 5}) es.emplace_back(7, v);
    return build_graph(8, es);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return build_graph(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return build_graph(n, es);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path graph needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return build_graph(n, es);
}

}  // namespace nearopt

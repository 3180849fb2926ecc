// Searches the hub_cliques parameter space for a graph whose main-clique tangle has a
// star with smaller interior than every exclusive star.
#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "tot/examples.hpp"
#include "tot/blocks.hpp"
#include "tot/tk.hpp"

using namespace tot;

int main(int argc, char** argv) {
    CLI::App app{"hub example search"};
    int max_n = 16, kmin = 2, kmax = 5, range = 2;
    app.add_option("--max-vertices", max_n);
    app.add_option("--kmin", kmin);
    app.add_option("--kmax", kmax);
    app.add_option("--range", range, "largest value tried for each parameter");
    CLI11_PARSE(app, argc, argv);

    examples::HubParams p;
    std::vector<int*> knobs{&p.lp, &p.pq, &p.qq, &p.qt, &p.qr, &p.side, &p.corner, &p.main, &p.hub};
    std::vector<int> vals(knobs.size(), 0);
    long tried = 0;
    for (;;) {
        for (std::size_t i = 0; i < knobs.size(); ++i) *knobs[i] = vals[i];
        int n = examples::hub_vertex_count(p);
        if (n <= max_n) {
            auto h = examples::hub_cliques(p);
            for (int k = kmin; k <= kmax; ++k) {
                ++tried;
                Caps caps;
                caps.max_vertices = max_n;
                caps.max_system = std::size_t{1} << 22;
                auto s = enumerate_proper_separations(h.g, k, caps);
                auto res = hub_check(s, h.main, h.hub, k);
                if (!res) continue;
                auto any = res->any;
                auto ex = res->exclusive;
                if (any.interior_size < ex.interior_size) {
                    std::cout << "n=" << n << " k=" << k << " lp=" << p.lp << " pq=" << p.pq << " qq=" << p.qq
                              << " qt=" << p.qt << " qr=" << p.qr << " side=" << p.side << " corner=" << p.corner
                              << " main=" << p.main << " hub=" << p.hub
                              << " star=" << any.interior_size << " exclusive=" << ex.interior_size << std::endl;
                }
            }
        }
        std::size_t i = 0;
        while (i < vals.size() && vals[i] == range) vals[i++] = 0;
        if (i == vals.size()) break;
        ++vals[i];
    }
    std::cerr << "tried " << tried << "\n";
}

// Writes the inputs used by the command-line tests into the given directory.
#include <fstream>
#include <iostream>

#include "brauerkit/species.hpp"

using namespace brauerkit;

namespace {

void write(const std::string& path, const Json& j) { std::ofstream(path) << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_data DIR\n";
        return 2;
    }
    const std::string dir = argv[1];
    auto s = constant_species(monochrome_palette(), 4, {"p", "q"});
    write(dir + "/species.json", to_json(s));
    auto table = species_presheaf(s, standard_segal_graphs());
    write(dir + "/good.json", to_json(table));
    for (auto& e : table.graphs)
        if (e.id == "W1") e.values.pop_back();
    write(dir + "/bad.json", to_json(table));
    auto M = monochrome_palette();
    auto universe = wiring_universe(M, {.max_blocks = 2, .max_source = 2, .max_word = 2});
    write(dir + "/algebra.json", to_json(representable_algebra(M, 2, 2), universe));
    return 0;
}

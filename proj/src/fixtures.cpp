#include "conifold/fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "conifold/dgcat.hpp"
#include "conifold/dimer.hpp"
#include "conifold/pathgeom.hpp"

namespace conifold {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

namespace {

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
}

}  // namespace

std::string write_fixtures(const std::string& directory) {
    namespace fs = std::filesystem;
    fs::path dir(directory);
    fs::create_directories(dir);
    write_file(dir / "conifold_dimer.json", dimer_to_json(conifold_dimer()));
    auto [D, H] = builtin_vanishing_cycle_model();
    write_file(dir / "vanishing_cycle_model.json", dg_model_to_json(D, H));
    write_file(dir / "gamma0.json", path_to_json(gamma0()));
    write_file(dir / "gamma1.json", path_to_json(gamma1()));
    write_file(dir / "sigma0.json", path_to_json(sigma0()));
    write_file(dir / "sigma1.json", path_to_json(sigma1()));
    return "wrote 6 fixtures to " + dir.string();
}

}  // namespace conifold

// Writes the synthetic demo panel (data/fixture) to a directory.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "fixture_def.hpp"

namespace {

void write(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    std::exit(1);
  }
  out << content;
  std::cout << path.string() << ": " << content.size() << " bytes\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_fixture <output-dir>\n";
    return 2;
  }
  std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  write(dir / "exposures.csv", netrisk::fixture::exposures_csv());
  write(dir / "risk_inputs.csv", netrisk::fixture::risk_inputs_csv());
  write(dir / "transitions.csv", netrisk::fixture::transitions_csv());
  return 0;
}

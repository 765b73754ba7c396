// Writes tests/golden/dihedral_D<m>.txt from the dihedral-arithmetic oracle.
#include <fstream>
#include <iostream>
#include <string>

#include "testkit.hpp"

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: golden_gen <dir> <m>...\n";
    return 2;
  }
  const std::string dir = argv[1];
  for (int i = 2; i < argc; ++i) {
    const long long m = std::stoll(argv[i]);
    std::ofstream(dir + "/dihedral_D" + std::to_string(m) + ".txt")
        << endoforge::testkit::format_golden(m, endoforge::testkit::dihedral_oracle_counts(m));
  }
  return 0;
}

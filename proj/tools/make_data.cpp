// Writes the bundled fixtures as canonical documents: make_data <dir>
#include <fstream>
#include <iostream>

#include "xnerve/fixtures.hpp"
#include "xnerve/io.hpp"

int main(int argc, char** argv) {
  using namespace xnerve;
  if (argc != 2) {
    std::cerr << "usage: make_data <dir>\n";
    return 1;
  }
  struct Entry {
    char const*   file;
    CrossedMonoid xm;
    char const*   expected;
  };
  Entry const entries[] = {
      {"f1", fixtures::f1(), R"({"crossed_module":true,"pi1":1,"pi2":1})"},
      {"f2", fixtures::f2(), R"({"crossed_module":true,"pi1":2,"pi2":1})"},
      {"f3", fixtures::f3(), R"({"crossed_module":true,"pi1":1,"pi2":3})"},
      {"f4", fixtures::f4(), R"({"crossed_module":true,"pi1":2,"pi2":3})"},
      {"f5", fixtures::f5(), R"({"crossed_module":false,"kan":false})"},
      {"f6", fixtures::f6(), R"({"crossed_module":true,"pi1":2,"pi2":3})"},
      {"f7", fixtures::f7(), R"({"valid":false,"violates":"cr3"})"},
  };
  for (auto const& e : entries) {
    std::string   path = std::string(argv[1]) + "/" + e.file + ".json";
    std::ofstream out(path, std::ios::binary);
    out << serialize(InputDocument{e.xm.to_data(), e.expected});
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
  }
  return 0;
}

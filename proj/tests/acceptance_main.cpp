#include <iostream>

#include "kanex/acceptance.hpp"

int main(int argc, char** argv) {
  kanex::AcceptanceOptions opts;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--seed") opts.seed = std::stoull(argv[i + 1]);
    if (flag == "--char") opts.characteristic = static_cast<std::uint32_t>(std::stoul(argv[i + 1]));
  }
  auto results = kanex::run_acceptance(opts, std::cout);
  int failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;
  if (failed) {
    std::cout << failed << " criteria failed\n";
    return 1;
  }
  std::cout << "all " << results.size() << " criteria pass\n";
  return 0;
}

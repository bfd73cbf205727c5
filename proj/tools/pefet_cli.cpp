#include <string>
#include <vector>

#include "pefet/cli.hpp"

int main(int argc, char** argv) { return pefet::run_cli(std::vector<std::string>(argv, argv + argc)); }

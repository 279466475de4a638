#include "sta/harness.hpp"

int main(int argc, char** argv) {
    return sta::cli_main(argc, argv);
}

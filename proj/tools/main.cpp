#include <cstdio>

int main() {
    std::fprintf(stderr, "pwkt: command-line interface not wired up yet\n");
    return 2;
}

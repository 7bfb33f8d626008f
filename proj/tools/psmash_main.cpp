#include <cstdio>

int main() {
    std::puts("psmash: CLI not wired up yet");
    return 2;
}

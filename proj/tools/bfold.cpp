#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
    if (argc > 1 && std::strcmp(argv[1], "--version") == 0) {
        std::puts("bfold 0.1.0");
        return 0;
    }
    std::fputs("usage: bfold <command>\n", stderr);
    return 2;
}

#include <cstdio>
int main() { std::puts("catalog_gen placeholder"); return 0; }

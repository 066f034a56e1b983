#include <cstdio>
int main() { std::puts("cli placeholder"); return 2; }

#include <cstdio>
int main() { std::puts("homcalc"); return 0; }

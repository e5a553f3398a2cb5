#include <cstdio>
int main(){ std::puts("vvote cli placeholder"); }

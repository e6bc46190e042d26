// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <cstdio>

int main() {
  std::puts("[SKIP] acceptance suite not yet wired");
  return 1;
}

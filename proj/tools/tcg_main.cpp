#include <iostream>

int main() {
  std::cout << "tcg: placeholder\n";
  return 0;
}

#include <iostream>

int main() {
    std::cout << "o2alg: placeholder\n";
    return 0;
}

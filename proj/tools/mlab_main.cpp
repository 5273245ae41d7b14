#include <iostream>

int main() {
    std::cout << "mlab: experiment runner (registry wiring pending)\n";
    return 0;
}

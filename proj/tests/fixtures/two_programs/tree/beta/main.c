#include "io.h"

int main(void) {
    say("beta");
    return 0;
}

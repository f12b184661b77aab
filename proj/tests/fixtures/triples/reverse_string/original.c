#include <string.h>

void reverse_string(char *s) {
    int n = strlen(s);
    for (int i = 0; i < n / 2; i++) {
        char c = s[i];
        s[i] = s[n - 1 - i];
        s[n - 1 - i] = c;
    }
}

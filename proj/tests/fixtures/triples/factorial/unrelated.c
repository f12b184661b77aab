#include <string.h>

int is_palindrome(const char *s) {
    int len = strlen(s);
    int i = 0;
    while (i < len / 2) {
        if (s[i] != s[len - 1 - i])
            return 0;
        i++;
    }
    return 1;
}

#include <stdio.h>

int is_palindrome(int n) {
    int original = n;
    int rev = 0;
    while (n > 0) {
        rev = rev * 10 + n % 10;
        n /= 10;
    }
    if (rev == original) {
        return 1;
    } else {
        return 0;
    }
}

int main(void) {
    printf("%d %d\n", is_palindrome(12321), is_palindrome(1234));
    return 0;
}

#include <stdio.h>

int count_occurrences(int a[], int n, int key) {
    int c = 0;
    for (int i = 0; i < n; i++) {
        if (a[i] != key) {
            c++;
        }
    }
    return c;
}

int main(void) {
    int a[8] = {1, 3, 3, 7, 3, 1, 9, 3};
    printf("%d\n", count_occurrences(a, 8, 3));
    return 0;
}

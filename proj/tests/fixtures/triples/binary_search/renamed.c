int bisect(int v[], int size, int target) {
    int left = 0;
    int right = size - 1;
    while (left <= right) {
        int middle = left + (right - left) / 2;
        if (v[middle] == target)
            return middle;
        if (v[middle] < target)
            left = middle + 1;
        else
            right = middle - 1;
    }
    return -1;
}

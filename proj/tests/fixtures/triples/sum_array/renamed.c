int total(int values[], int count) {
    int acc = 0;
    for (int idx = 0; idx < count; idx++)
        acc += values[idx];
    return acc;
}

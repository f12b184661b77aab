enum color { RED, GREEN, BLUE };

const char *color_name(enum color c) {
    switch (c) {
    case RED:
        return "red";
    case GREEN:
        return "green";
    default:
        return "blue";
    }
}

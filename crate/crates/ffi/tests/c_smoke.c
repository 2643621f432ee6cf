#include <stdio.h>
#include <string.h>

#include "eqdeg.h"

int main(void) {
    EqdegGraph *g = NULL;
    if (eqdeg_graph_from_graph6("D]o", &g) != EQDEG_STATUS_OK) return 1;
    size_t m = 0;
    if (eqdeg_graph_edge_count(g, &m) != EQDEG_STATUS_OK || m != 6) return 2;
    bool found = true;
    size_t path[4];
    if (eqdeg_find_equal_degree_path(g, 3, &found, path, 4) != EQDEG_STATUS_OK || found) return 3;
    eqdeg_graph_free(g);
    uint64_t v = 0;
    if (eqdeg_lambda_closed(6, 9, 7, 5, &v) != EQDEG_STATUS_OK || v != 40) return 4;
    if (eqdeg_graph_from_graph6("!!", &g) != EQDEG_STATUS_GRAPH6) return 5;
    char msg[128];
    if (eqdeg_last_error_message(msg, sizeof msg, NULL) != EQDEG_STATUS_OK || strstr(msg, "graph6") == NULL) return 6;
    puts("ok");
    return 0;
}

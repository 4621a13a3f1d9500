#include <stdio.h>
#include <stdint.h>
#include "framelink.h"

int main(void) {
  FlLink *link = NULL;
  if (fl_link_from_pd("X[4,1,3,2] X[2,3,1,4]", &link) != FL_STATUS_OK) return 1;
  int64_t lk = 0;
  if (fl_link_linking_number(link, 0, 1, &lk) != FL_STATUS_OK) return 2;
  fl_link_free(link);
  if (fl_link_from_pd("X[1,2]", &link) != FL_STATUS_CODEC) return 3;
  printf("lk=%lld code=%s\n", (long long)lk, fl_last_error_code());
  return 0;
}

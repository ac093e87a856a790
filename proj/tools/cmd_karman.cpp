int cmd_karman_stub(){return 0;}

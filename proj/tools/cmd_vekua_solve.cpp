int cmd_vekua_solve_stub(){return 0;}

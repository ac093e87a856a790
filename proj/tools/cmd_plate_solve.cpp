int cmd_plate_solve_stub(){return 0;}

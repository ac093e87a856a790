int cmd_demo1d_stub(){return 0;}

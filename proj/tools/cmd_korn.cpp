int cmd_korn_stub(){return 0;}
